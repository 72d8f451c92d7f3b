//! Acceptance suite: one PASS/FAIL line per criterion, run sequentially so
//! the timing limits are measured without interference.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use common::{catalog_rings, Brute};
use finring::classify::{self, decompositions, Mode};
use finring::construct::{formal_matrix, k_s_ring, zn};
use finring::harness::{self, Catalog, EntryStatus, Outcome};
use finring::hunt::{self, HuntCaps, Target};
use finring::spec::{build_ring, parse_spec};
use finring::{Limits, Ring};

const VERDICT_LIMIT: Duration = Duration::from_secs(5);
const SUITE_LIMIT: Duration = Duration::from_secs(60);
const HUNT_LIMIT: Duration = Duration::from_secs(120);
const SUITE_CHECKS: usize = 31;
const ORACLE_ORDER: usize = 64;

type Criterion = Result<String, String>;
type Run = fn() -> Criterion;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn flag(r: &Ring, name: &str) -> bool {
    classify::profile(r)
        .flags
        .entries()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, v)| v)
        .unwrap()
}

fn verdict_table() -> Criterion {
    let start = Instant::now();
    let limits = Limits::default();
    let expected: &[(&str, &str, bool)] = &[
        ("Z3", "weakly_nil_clean", true),
        ("Z3", "nil_clean", false),
        ("Z3", "uwnc", true),
        ("Z3", "unc", false),
        ("Z6", "uwnc", true),
        ("Z6", "unc", false),
        ("prod(Z3,M2(Z2))", "uwnc", true),
        ("prod(Z3,M2(Z2))", "unc", false),
        ("prod(Z3,Z3)", "uwnc", false),
        ("sub(M2(Z2);[[0,1],[1,1]])", "reduced", true),
        ("sub(M2(Z2);[[0,1],[1,1]])", "uwnc", false),
        ("M2(Z2)", "uwnc", true),
        ("cmat(Z4;R,R;2R,R)", "uwnc", true),
        ("K(2)(Z4)", "uwnc", true),
    ];
    let mut rings: HashMap<&str, Ring> = HashMap::new();
    for &(spec, name, want) in expected {
        let r = match rings.get(spec) {
            Some(r) => r.clone(),
            None => {
                let r = build_ring(spec, &limits).map_err(|e| format!("{spec}: {e}"))?;
                rings.insert(spec, r.clone());
                r
            }
        };
        let got = flag(&r, name);
        ensure(got == want, || format!("{spec}: {name} = {got}, expected {want}"))?;
    }
    let sub = &rings["sub(M2(Z2);[[0,1],[1,1]])"];
    ensure(sub.order() == 4, || {
        format!("generated subring has order {}", sub.order())
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < VERDICT_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{} verdicts in {elapsed:.2?}", expected.len()))
}

fn full_suite() -> Criterion {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let report = pool.install(|| harness::run_suite(&Catalog::default_catalog()));
    let elapsed = start.elapsed();
    let per_check = report.per_check();
    ensure(per_check.len() == SUITE_CHECKS, || {
        format!("{} checks registered", per_check.len())
    })?;
    let fails: Vec<String> = report
        .verdicts
        .iter()
        .filter(|v| v.outcome == Outcome::Fail)
        .map(|v| format!("{} on {} ({})", v.id, v.ring, v.detail))
        .collect();
    let mut problems = Vec::new();
    if !fails.is_empty() {
        problems.push(format!("{} fails: {}", fails.len(), fails.join("; ")));
    }
    if elapsed >= SUITE_LIMIT {
        problems.push(format!("over the {SUITE_LIMIT:?} limit"));
    }
    let summary = format!(
        "{} checks, {} pass / {} skip / {} fail, single-threaded {elapsed:.2?}",
        per_check.len(),
        report.counts.pass,
        report.counts.skip,
        report.counts.fail
    );
    if problems.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {}", problems.join("; ")))
    }
}

fn small_rings() -> Vec<(String, Ring)> {
    let limits = Limits::default();
    let mut rings: Vec<(String, Ring)> = catalog_rings()
        .into_iter()
        .filter(|(_, r)| r.order() <= ORACLE_ORDER)
        .collect();
    for n in 2..=ORACLE_ORDER as u32 {
        let label = format!("Z{n}");
        if !rings.iter().any(|(l, _)| *l == label) {
            rings.push((label, zn(n, &limits).unwrap()));
        }
    }
    rings
}

fn oracles() -> Criterion {
    let mut radicals = 0;
    for (label, r) in catalog_rings().into_iter().filter(|(_, r)| r.order() <= ORACLE_ORDER) {
        let oracle = r.lower_nilradical_oracle().map_err(|e| format!("{label}: {e}"))?;
        ensure(oracle.same_members(r.jacobson_radical().members()), || {
            format!("{label}: strongly nilpotent set differs from J")
        })?;
        let b = Brute::new(&r);
        let brute: Vec<u32> = (0..b.n).filter(|&x| b.jac[x]).map(|x| x as u32).collect();
        ensure(brute == oracle.ids(), || {
            format!("{label}: oracle differs from brute-force J")
        })?;
        radicals += 1;
    }

    let mut elements = 0;
    let small = small_rings();
    for (label, r) in &small {
        let b = Brute::new(r);
        for x in r.elements() {
            for mode in Mode::ALL {
                let (signs, strong): (&[i8], bool) = match mode {
                    Mode::NilClean => (&[1], false),
                    Mode::Weakly => (&[1, -1], false),
                    Mode::Strongly => (&[1], true),
                    Mode::StronglyWeakly => (&[1, -1], true),
                };
                let ws = decompositions(r, x, mode);
                let triples = b.triples(x.index(), signs, strong);
                for w in &ws {
                    ensure(w.recomputes(r, x), || {
                        format!("{label}: witness for {x:?} does not recompute")
                    })?;
                    let t = (w.sign, w.idempotent.index(), w.nilpotent.index());
                    ensure(triples.contains(&t), || {
                        format!("{label}: {x:?} witness {t:?} not brute-force")
                    })?;
                }
                let mut lib: Vec<usize> = ws
                    .iter()
                    .map(|w| {
                        if w.sign == 1 {
                            w.idempotent.index()
                        } else {
                            b.neg[w.idempotent.index()]
                        }
                    })
                    .collect();
                lib.sort();
                ensure(lib.len() == ws.len(), || {
                    format!("{label}: duplicate signed idempotent for {x:?}")
                })?;
                ensure(lib == b.signed_values(x.index(), signs, strong), || {
                    format!("{label}: {mode:?} witness set of {x:?} differs")
                })?;
            }
            elements += 1;
        }
    }

    let limits = Limits::default();
    let z4 = zn(4, &limits).unwrap();
    let fm = formal_matrix(&z4, 2, z4.int(2), &limits).map_err(|e| e.to_string())?;
    let k = k_s_ring(&z4, z4.int(0), &limits).map_err(|e| e.to_string())?;
    ensure(fm.order() == 256 && k.order() == 256, || {
        "orders differ from 256".into()
    })?;
    ensure(fm.zero() == k.zero() && fm.one() == k.one(), || {
        "identities differ".into()
    })?;
    let mut products = 0;
    for a in fm.elements() {
        for c in fm.elements() {
            ensure(fm.add(a, c) == k.add(a, c) && fm.mul(a, c) == k.mul(a, c), || {
                format!("tables differ at ({a:?}, {c:?})")
            })?;
            products += 1;
        }
    }
    Ok(format!(
        "{radicals} radicals, {elements} elements over {} rings x 4 modes, {products} products",
        small.len()
    ))
}

fn structural() -> Criterion {
    let catalog = Catalog::default_catalog();
    let (entries, _) = harness::prepare(&catalog);
    let mut built = 0;
    for e in &entries {
        match e.status {
            EntryStatus::Built => built += 1,
            EntryStatus::Gated => {}
            _ => {
                return Err(format!(
                    "{}: {:?} {}",
                    e.spec,
                    e.status,
                    e.detail.clone().unwrap_or_default()
                ))
            }
        }
    }
    let limits = Limits::default();
    let mut rings = catalog_rings();
    for n in 2..=100u32 {
        rings.push((format!("Z{n}"), zn(n, &limits).unwrap()));
    }
    for (label, r) in &rings {
        let j = r.jacobson_radical();
        let one_plus_j = j.iter().all(|x| r.is_unit(r.add(r.one(), x)));
        ensure(one_plus_j, || format!("{label}: 1 + J not inside U"))?;
        ensure(j.iter().all(|x| r.is_nilpotent(x)), || format!("{label}: J not nil"))?;
        let broken = classify::profile(r).flags.lattice_violations();
        ensure(broken.is_empty(), || format!("{label}: lattice broken: {broken:?}"))?;
    }
    let mut involutions = 0;
    for (label, r) in catalog_rings() {
        let b = Brute::new(&r);
        for x in 0..b.n {
            if b.m(x, x) == b.one && b.nil_clean(x) {
                ensure(b.nil[b.sub(x, b.one)], || {
                    format!("{label}: x = {x} squares to 1, x - 1 not nilpotent")
                })?;
                involutions += 1;
            }
        }
    }
    Ok(format!(
        "{built} catalog rings audited, {} profiles, {involutions} nil-clean square roots of 1",
        rings.len()
    ))
}

fn zero_fail_with_pass(ids: &[&str]) -> Criterion {
    let (_, ctx) = harness::prepare(&Catalog::default_catalog());
    let verdicts = harness::run_checks(&ctx, ids).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for id in ids {
        let vs: Vec<_> = verdicts.iter().filter(|v| v.id == *id).collect();
        if let Some(f) = vs.iter().find(|v| v.outcome == Outcome::Fail) {
            return Err(format!("{id} fails on {}: {}", f.ring, f.detail));
        }
        let pass = vs.iter().filter(|v| v.outcome == Outcome::Pass).count();
        ensure(pass > 0, || format!("{id} has no passing instance"))?;
        parts.push(format!("{id} {pass}"));
    }
    Ok(parts.join(", "))
}

fn biconditionals() -> Criterion {
    zero_fail_with_pass(&[
        "CHK-L2.13",
        "CHK-2UNIT",
        "CHK-ABEL",
        "CHK-LOCAL",
        "CHK-2PRIM",
        "CHK-P2.10",
    ])
}

fn group_rings() -> Criterion {
    let limits = Limits::default();
    let mut nil = 0;
    for spec in ["GR(Z4,C2)", "GR(Z2,C2)", "GR(Z2,C4)", "GR(Z3,C3)"] {
        let gr = parse_spec(spec)
            .and_then(|s| s.build_group_ring(&limits))
            .map_err(|e| format!("{spec}: {e}"))?;
        let b = Brute::new(&gr.ring);
        for x in gr.augmentation_ideal.iter() {
            ensure(b.nil[x.index()], || {
                format!("{spec}: {x:?} in the augmentation ideal is not nilpotent")
            })?;
            nil += 1;
        }
        let kernel = gr.augmentation.kernel();
        ensure(kernel.same_members(gr.augmentation_ideal.members()), || {
            format!("{spec}: augmentation ideal is not the kernel")
        })?;
    }
    let checks = zero_fail_with_pass(&["CHK-GR", "CHK-GRP", "CHK-RETR"])?;
    Ok(format!("{nil} augmentation-ideal elements nilpotent; {checks}"))
}

fn brute_sides(target: Target, b: &Brute, reading: Option<classify::Interpretation>) -> (bool, bool, bool) {
    let f = b.flags();
    match target {
        Target::Conj1 => {
            let rhs = match reading {
                Some(classify::Interpretation::RingLevel) => b.uniquely_weakly_ring(),
                _ => b.units_uniquely_weakly(),
            };
            (true, f.wuu, rhs)
        }
        Target::Conj2 => (true, f.strongly_weakly_nil_clean, f.semipotent && f.wuu),
        _ => {
            let applicable = f.clean && f.uwnc;
            (applicable, applicable, f.weakly_nil_clean)
        }
    }
}

fn hunter() -> Criterion {
    let catalog = Catalog::default_catalog();
    let caps = HuntCaps {
        max_zn: 100,
        families: true,
    };
    let limits = catalog.limits();
    let start = Instant::now();
    let reports: Vec<_> = [Target::Conj1, Target::Conj2, Target::Prob3]
        .into_iter()
        .map(|t| hunt::hunt(t, &catalog, &caps))
        .collect();
    let elapsed = start.elapsed();
    ensure(elapsed < HUNT_LIMIT, || format!("hunts took {elapsed:?}"))?;

    let mut brute: HashMap<String, Brute> = HashMap::new();
    let mut rows = 0;
    let mut replayed = 0;
    let mut summary = Vec::new();
    for rep in &reports {
        ensure(rep.rows.len() >= rep.rings_scanned, || {
            format!("{}: missing rows", rep.target)
        })?;
        for z in ["Z2", "Z97", "Z100"] {
            ensure(rep.rows.iter().any(|r| r.ring == z), || {
                format!("{}: {z} not scanned", rep.target)
            })?;
        }
        for row in &rep.rows {
            if !brute.contains_key(&row.ring) {
                let r = harness::resolve(&row.ring, &limits).map_err(|e| e.to_string())?;
                brute.insert(row.ring.clone(), Brute::new(&r));
            }
            let b = &brute[&row.ring];
            let (applicable, lhs, rhs) = brute_sides(rep.target, b, row.reading);
            ensure(
                row.applicable == applicable && row.lhs.value == lhs && row.rhs.value == rhs,
                || {
                    format!(
                        "{} on {}: library ({}, {}, {}) vs brute ({applicable}, {lhs}, {rhs})",
                        rep.target, row.ring, row.applicable, row.lhs.value, row.rhs.value
                    )
                },
            )?;
            ensure(row.holds == (!applicable || lhs == rhs), || {
                format!("{}: holds flag", row.ring)
            })?;
            rows += 1;
        }
        for cx in &rep.counterexamples {
            let facts = harness::replay(cx, &limits).map_err(|e| e.to_string())?;
            ensure(!facts.is_empty() && facts.iter().all(|(_, ok)| *ok), || {
                format!("{}: certificate on {} does not replay", rep.target, cx.ring)
            })?;
            let violated = rep.rows.iter().filter(|r| r.ring == cx.ring).any(|r| {
                let (a, l, h) = brute_sides(rep.target, &brute[&r.ring], r.reading);
                a && l != h
            });
            ensure(violated, || {
                format!("{}: {} is not a brute-force violation", rep.target, cx.ring)
            })?;
            let r = harness::resolve(&cx.ring, &limits).map_err(|e| e.to_string())?;
            for &x in &cx.elements {
                ensure(r.contains(x), || {
                    format!("{}: element {x:?} outside {}", rep.target, cx.ring)
                })?;
                let _ = classify::classify_element(&r, x);
            }
            replayed += 1;
        }
        summary.push(format!(
            "{} {:?} ({} cx)",
            rep.target,
            rep.status,
            rep.counterexamples.len()
        ));
    }
    Ok(format!(
        "{}; {rows} rows match brute force, {replayed} certificates replay; hunts {elapsed:.2?}",
        summary.join(", ")
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Run); 7] = [
        ("verdict table", verdict_table),
        ("theorem suite", full_suite),
        ("oracle equivalences", oracles),
        ("structural properties", structural),
        ("biconditionals", biconditionals),
        ("group rings", group_rings),
        ("hunter", hunter),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(msg) => println!("PASS {} {name}: {msg}", i + 1),
            Err(msg) => {
                println!("FAIL {} {name}: {msg}", i + 1);
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
