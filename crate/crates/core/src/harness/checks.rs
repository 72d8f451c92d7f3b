use crate::classify;
use crate::construct::{self, Cell, EndoName, FiniteGroup, GroupRing};
use crate::spec::{parse_spec, RingSpec};
use crate::{ElementId, Ring, RingError};

use super::replay::evaluate_property;
use super::{Body, CatalogRing, CheckDescriptor, Context, Counterexample, Fact, Run, Scope};

type Res = Result<(), Counterexample>;

pub(crate) static REGISTRY: &[CheckDescriptor] = &[
    CheckDescriptor {
        id: "CHK-P2.1",
        statement: "a unit is strongly weakly nil-clean iff it lies in ±1 + Nil(R); R is WUU iff every unit is strongly weakly nil-clean",
        applicability: "every ring",
        scope: Scope::Ring,
        body: Body::Ring(p2_1),
    },
    CheckDescriptor {
        id: "CHK-1.7-1",
        statement: "nil-clean rings are weakly nil-clean; Z3 is weakly nil-clean but not nil-clean",
        applicability: "nil-clean rings, and Z3",
        scope: Scope::Ring,
        body: Body::Ring(e1_7_1),
    },
    CheckDescriptor {
        id: "CHK-1.7-5",
        statement: "UNC rings are UWNC; Z3, Z6 and Z3 x M2(Z2) are UWNC but not UNC",
        applicability: "UNC rings, and the three named rings",
        scope: Scope::Ring,
        body: Body::Ring(e1_7_5),
    },
    CheckDescriptor {
        id: "CHK-P2.3",
        statement: "R UWNC and S UNC imply R x S UWNC",
        applicability: "pairs of catalog rings with product order within pair_budget",
        scope: Scope::Pair,
        body: Body::Pair(p2_3),
    },
    CheckDescriptor {
        id: "CHK-P2.4",
        statement: "R x S is UWNC iff R and S are UWNC and at most one of them is not UNC",
        applicability: "pairs of catalog rings with product order within pair_budget",
        scope: Scope::Pair,
        body: Body::Pair(p2_4),
    },
    CheckDescriptor {
        id: "CHK-E2.4",
        statement: "Z3 is UWNC but Z3 x Z3 is not",
        applicability: "Z3",
        scope: Scope::Ring,
        body: Body::Ring(e2_4),
    },
    CheckDescriptor {
        id: "CHK-C2.6",
        statement: "for n >= 2: R^n UWNC iff R^n UNC iff R UNC",
        applicability: "n = 2, 3 with |R|^n within budget",
        scope: Scope::Ring,
        body: Body::Ring(c2_6),
    },
    CheckDescriptor {
        id: "CHK-T2.7",
        statement: "R UWNC iff J(R) nil and R/J(R) UWNC; R UWNC iff R/I UWNC for nil ideals I",
        applicability: "every ring; I ranges over principal ideals generated inside J(R)",
        scope: Scope::Ring,
        body: Body::Ring(t2_7),
    },
    CheckDescriptor {
        id: "CHK-C2.8",
        statement: "TE(R) and R[x]/(x^n), n >= 2, are UWNC iff R is",
        applicability: "constructions within budget",
        scope: Scope::Ring,
        body: Body::Ring(c2_8),
    },
    CheckDescriptor {
        id: "CHK-DT",
        statement: "DT(R,R) = R[x,y]/(x^2,y^2) is UWNC iff R is",
        applicability: "|R|^4 within budget",
        scope: Scope::Ring,
        body: Body::Ring(dt),
    },
    CheckDescriptor {
        id: "CHK-C2.9",
        statement: "[[R,M],[0,S]] UWNC implies R, S UWNC; converse when one is UNC and the other UWNC",
        applicability: "T2(R) as [[R,R],[0,R]]; T3(R) as [[R,R^2],[0,T2(R)]] and [[T2(R),R^2],[0,R]]",
        scope: Scope::Ring,
        body: Body::Ring(c2_9),
    },
    CheckDescriptor {
        id: "CHK-SKEW",
        statement: "T_n(R,α) is UWNC iff R is",
        applicability: "n = 2, 3 within budget; α = id, and swap on R = A x A",
        scope: Scope::Ring,
        body: Body::Ring(skew),
    },
    CheckDescriptor {
        id: "CHK-P2.10",
        statement: "T_n(R) UWNC iff R UNC iff T_n(R) UNC",
        applicability: "n = 2, 3 within budget",
        scope: Scope::Ring,
        body: Body::Ring(p2_10),
    },
    CheckDescriptor {
        id: "CHK-SUBR",
        statement: "in T = M2(Z2), u = [[0,1],[1,1]] has u^3 = 1 and generates R = {0,1,u,u^2}; R is reduced and not UWNC while T is UWNC",
        applicability: "M2(Z2) and its subring generated by u",
        scope: Scope::Ring,
        body: Body::Ring(subr),
    },
    CheckDescriptor {
        id: "CHK-P2.12",
        statement: "R weakly nil-clean implies Z(R) strongly weakly nil-clean; R UWNC implies Z(R) WUU",
        applicability: "weakly nil-clean or UWNC rings",
        scope: Scope::Ring,
        body: Body::Ring(p2_12),
    },
    ring_check(
        "CHK-L2.13",
        "R UNC iff R UWNC and 2 ∈ J(R)",
        "every ring",
        l2_13,
    ),
    ring_check(
        "CHK-L-UNI",
        "x nil-clean with x^2 = 1 implies x - 1 nilpotent",
        "rings with a nil-clean square root of 1",
        l_uni,
    ),
    ring_check(
        "CHK-2UNIT",
        "if 2 ∈ U(R): R UWNC iff R WUU",
        "2 ∈ U(R)",
        two_unit,
    ),
    ring_check("CHK-ABEL", "R abelian: R UWNC iff R WUU", "abelian rings", abel),
    ring_check(
        "CHK-2PRIM",
        "R 2-primal: R UWNC iff R WUU iff (J(R) = Nil(R) and U(R) = ±1 + J(R))",
        "2-primal rings",
        two_primal,
    ),
    ring_check(
        "CHK-P0.2.6",
        "M_n(R) and M_m(R) UWNC imply T_{n+m}(R) UWNC",
        "n + m = 2, 3 with T_{n+m}(R) and both matrix rings within budget",
        p0_2_6,
    ),
    ring_check(
        "CHK-P2.16",
        "Morita context with MN, NM nilpotent: ring UWNC implies A, B UWNC; converse when one is UNC and the other UWNC",
        "K_s(R) with s ∈ Z(R) ∩ Nil(R), and 2x2 entry-constrained rings with full diagonal",
        p2_16,
    ),
    ring_check(
        "CHK-MORZ4",
        "[[Z4,Z4],[2Z4,Z4]] is UWNC, Z4 being UNC",
        "cmat(Z4;R,R;2R,R)",
        mor_z4,
    ),
    ring_check(
        "CHK-C2.17",
        "s ∈ Z(R) ∩ Nil(R): K_s(R) UWNC implies R UWNC; converse when R is UNC",
        "K_s rings in the catalog and K_s over catalog rings within budget",
        c2_17,
    ),
    ring_check("CHK-KZ4", "K_2(Z4) is UWNC, Z4 being UNC", "K(2)(Z4)", k_z4),
    ring_check(
        "CHK-FM",
        "s ∈ Z(R) ∩ Nil(R): M_n(R;s) UWNC implies R UWNC, converse when R is UNC; M_2(R;s) has the tables of K_{s^2}(R)",
        "formal matrix rings in the catalog and over catalog rings within budget",
        fm,
    ),
    ring_check(
        "CHK-TRIVM",
        "trivial Morita context UWNC implies A, B UWNC; converse when one is UNC and the other UWNC",
        "K_0(R) and T2(R) within budget",
        trivm,
    ),
    ring_check(
        "CHK-LOCAL",
        "R local: R UWNC iff R weakly nil-clean; R is clean",
        "local rings",
        local,
    ),
    ring_check(
        "CHK-RETR",
        "for ε∘i = id: ε maps Nil, U, Id onto Nil, U, Id; S UWNC implies R UWNC; R UWNC and ker ε ⊆ Nil(S) imply S UWNC (same for WUU)",
        "group rings with augmentation, and first-coordinate retractions of TE, DT, quotpoly and skew triangular rings",
        retr,
    ),
    ring_check(
        "CHK-GR",
        "RG UWNC implies R UWNC, converse when Δ(G) ⊆ Nil(RG); same for WUU",
        "group rings in the catalog and R[C2], R[C3], R[C4], R[C2xC2] over catalog rings within budget",
        gr,
    ),
    ring_check(
        "CHK-GRP",
        "R UWNC with p ∈ Nil(R) and G a finite p-group imply RG UWNC; same for WUU",
        "group rings with G a p-group and p nilpotent in R",
        grp,
    ),
];

const fn ring_check(
    id: &'static str,
    statement: &'static str,
    applicability: &'static str,
    body: fn(&Context, &CatalogRing, &mut Run) -> Res,
) -> CheckDescriptor {
    CheckDescriptor {
        id,
        statement,
        applicability,
        scope: Scope::Ring,
        body: Body::Ring(body),
    }
}

// ---------------------------------------------------------------------------
// facts and claim helpers

fn flag(ring: &Ring, property: &str) -> bool {
    evaluate_property(ring, None, property).unwrap_or_else(|| panic!("unknown ring property {property}"))
}

fn fact(ring: &Ring, property: &str) -> Fact {
    Fact {
        ring: ring.label().to_string(),
        element: None,
        property: property.to_string(),
        observed: flag(ring, property),
    }
}

fn efact(ring: &Ring, x: ElementId, property: &str) -> Fact {
    Fact {
        ring: ring.label().to_string(),
        element: Some(x),
        property: property.to_string(),
        observed: evaluate_property(ring, Some(x), property)
            .unwrap_or_else(|| panic!("unknown element property {property}")),
    }
}

fn names(facts: &[Fact]) -> String {
    facts
        .iter()
        .map(|f| match f.element {
            None => format!("{}({})={}", f.property, f.ring, f.observed),
            Some(x) => format!("{}({} in {})={}", f.property, x.0, f.ring, f.observed),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn counterexample(inputs: &[&str], ring: &Ring, facts: Vec<Fact>, detail: String) -> Counterexample {
    let mut elements = Vec::new();
    for f in &facts {
        if let Some(x) = f.element {
            if f.ring == ring.label() && !elements.contains(&x) {
                elements.push(x);
            }
        } else if f.ring == ring.label() && !f.observed {
            if let Some(xs) = classify::profile(ring).refutations.get(f.property.as_str()) {
                for &x in xs {
                    if !elements.contains(&x) {
                        elements.push(x);
                    }
                }
            }
        }
    }
    Counterexample {
        inputs: inputs.iter().map(|s| s.to_string()).collect(),
        ring: ring.label().to_string(),
        elements,
        facts,
        detail,
    }
}

fn all(facts: &[Fact]) -> bool {
    facts.iter().all(|f| f.observed)
}

/// `hyp ⇒ concl`. Returns whether the hypotheses held.
fn implies(
    claim: &str,
    inputs: &[&str],
    ring: &Ring,
    hyp: Vec<Fact>,
    concl: Vec<Fact>,
) -> Result<bool, Counterexample> {
    if !all(&hyp) {
        return Ok(false);
    }
    if all(&concl) {
        return Ok(true);
    }
    let detail = format!("{claim}: hypotheses hold but the conclusion fails [{}]", names(&concl));
    let mut facts = hyp;
    facts.extend(concl);
    Err(counterexample(inputs, ring, facts, detail))
}

/// `left ⇔ right`, reporting the broken direction.
fn iff(claim: &str, inputs: &[&str], ring: &Ring, left: Vec<Fact>, right: Vec<Fact>) -> Res {
    let (l, r) = (all(&left), all(&right));
    if l == r {
        return Ok(());
    }
    let direction = if l {
        "forward direction fails: left side holds, right side does not"
    } else {
        "backward direction fails: right side holds, left side does not"
    };
    let detail = format!(
        "{claim}: {direction} [left: {}; right: {}]",
        names(&left),
        names(&right)
    );
    let mut facts = left;
    facts.extend(right);
    Err(counterexample(inputs, ring, facts, detail))
}

/// Each fact must have the expected value.
fn expect(claim: &str, inputs: &[&str], ring: &Ring, facts: Vec<(Fact, bool)>) -> Res {
    let bad: Vec<&(Fact, bool)> = facts.iter().filter(|(f, want)| f.observed != *want).collect();
    if bad.is_empty() {
        return Ok(());
    }
    let detail = format!(
        "{claim}: unexpected values [{}]",
        names(&bad.iter().map(|(f, _)| f.clone()).collect::<Vec<_>>())
    );
    Err(counterexample(
        inputs,
        ring,
        facts.into_iter().map(|(f, _)| f).collect(),
        detail,
    ))
}

fn fail_plain(claim: &str, inputs: &[&str], ring: &Ring, elements: Vec<ElementId>, detail: String) -> Counterexample {
    Counterexample {
        inputs: inputs.iter().map(|s| s.to_string()).collect(),
        ring: ring.label().to_string(),
        elements,
        facts: Vec::new(),
        detail: format!("{claim}: {detail}"),
    }
}

fn pow_order(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(n as u128))
}

fn derive(
    ctx: &Context,
    label: String,
    order: u128,
    inputs: &[&str],
    build: impl FnOnce() -> crate::Result<Ring>,
) -> Result<Option<Ring>, Counterexample> {
    ctx.derive(&label, order, ctx.budget, inputs, build)
}

/// Builds a sub-spec (a catalog ring's base) through the cache.
fn build_spec(ctx: &Context, spec: &RingSpec, inputs: &[&str]) -> Result<Ring, Counterexample> {
    let label = spec.to_string();
    let limits = ctx.limits;
    let ring = ctx.derive(&label, 0, usize::MAX, inputs, || {
        spec.build(&limits).map_err(|e| RingError::InvalidSize(e.to_string()))
    })?;
    Ok(ring.expect("no budget applies"))
}

fn spec_of(r: &CatalogRing) -> Option<RingSpec> {
    parse_spec(&r.label).ok()
}

/// Integer multiples `k·1` that are nilpotent, deduplicated.
fn integer_nilpotents(ring: &Ring) -> Vec<(u64, ElementId)> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    let mut acc = ring.zero();
    for k in 0..ring.characteristic() {
        if !seen.contains(&acc) {
            seen.push(acc);
            if ring.is_nilpotent(acc) {
                out.push((k, acc));
            }
        }
        acc = ring.add(acc, ring.one());
    }
    out
}

// ---------------------------------------------------------------------------
// element-level and lattice checks

fn p2_1(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    let inputs = [r.label.as_str()];
    for u in ring.units().iter() {
        iff(
            "a unit is strongly weakly nil-clean iff it lies in ±1 + Nil",
            &inputs,
            ring,
            vec![efact(ring, u, "strongly_weakly_nil_clean")],
            vec![efact(ring, u, "plus_minus_one_nil")],
        )?;
    }
    iff(
        "WUU iff every unit is strongly weakly nil-clean",
        &inputs,
        ring,
        vec![fact(ring, "wuu")],
        vec![fact(ring, "all_units_strongly_weakly_nil_clean")],
    )?;
    run.instance(format!("{}: {} units", r.label, ring.units().len()));
    Ok(())
}

fn e1_7_1(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    let inputs = [r.label.as_str()];
    if implies(
        "nil-clean implies weakly nil-clean",
        &inputs,
        ring,
        vec![fact(ring, "nil_clean")],
        vec![fact(ring, "weakly_nil_clean")],
    )? {
        run.instance(format!("{} is nil-clean", r.label));
    }
    if r.label == "Z3" {
        expect(
            "Z3 is weakly nil-clean but not nil-clean",
            &inputs,
            ring,
            vec![(fact(ring, "weakly_nil_clean"), true), (fact(ring, "nil_clean"), false)],
        )?;
        run.instance("Z3 weakly nil-clean, not nil-clean");
    }
    Ok(())
}

const UWNC_NOT_UNC: [&str; 3] = ["Z3", "Z6", "prod(Z3,M2(Z2))"];

fn e1_7_5(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    let inputs = [r.label.as_str()];
    if implies(
        "UNC implies UWNC",
        &inputs,
        ring,
        vec![fact(ring, "unc")],
        vec![fact(ring, "uwnc")],
    )? {
        run.instance(format!("{} is UNC", r.label));
    }
    if UWNC_NOT_UNC.contains(&r.label.as_str()) {
        expect(
            "UWNC but not UNC",
            &inputs,
            ring,
            vec![(fact(ring, "uwnc"), true), (fact(ring, "unc"), false)],
        )?;
        run.instance(format!("{} UWNC, not UNC", r.label));
    }
    Ok(())
}

fn l2_13(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    iff(
        "UNC iff UWNC and 2 ∈ J",
        &[r.label.as_str()],
        ring,
        vec![fact(ring, "unc")],
        vec![fact(ring, "uwnc"), fact(ring, "two_in_j")],
    )?;
    run.instance(r.label.clone());
    Ok(())
}

fn l_uni(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    let inputs = [r.label.as_str()];
    let mut count = 0;
    for x in ring.elements().filter(|&x| ring.mul(x, x) == ring.one()) {
        if implies(
            "x nil-clean with x^2 = 1 implies x - 1 nilpotent",
            &inputs,
            ring,
            vec![efact(ring, x, "squares_to_one"), efact(ring, x, "nil_clean")],
            vec![efact(ring, x, "minus_one_nilpotent")],
        )? {
            count += 1;
        }
    }
    if count > 0 {
        run.instance(format!("{}: {count} nil-clean square roots of 1", r.label));
    }
    Ok(())
}

fn two_unit(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    if !flag(ring, "two_in_u") {
        return Ok(());
    }
    iff(
        "2 ∈ U: UWNC iff WUU",
        &[r.label.as_str()],
        ring,
        vec![fact(ring, "uwnc")],
        vec![fact(ring, "wuu")],
    )?;
    run.instance(r.label.clone());
    Ok(())
}

fn abel(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    if !flag(ring, "abelian") {
        return Ok(());
    }
    iff(
        "abelian: UWNC iff WUU",
        &[r.label.as_str()],
        ring,
        vec![fact(ring, "uwnc")],
        vec![fact(ring, "wuu")],
    )?;
    run.instance(r.label.clone());
    Ok(())
}

fn two_primal(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    if !flag(ring, "two_primal") {
        return Ok(());
    }
    let inputs = [r.label.as_str()];
    iff(
        "2-primal: UWNC iff WUU",
        &inputs,
        ring,
        vec![fact(ring, "uwnc")],
        vec![fact(ring, "wuu")],
    )?;
    iff(
        "2-primal: UWNC iff J = Nil and U = ±1 + J",
        &inputs,
        ring,
        vec![fact(ring, "uwnc")],
        vec![
            fact(ring, "radical_is_nil_set"),
            fact(ring, "units_are_plus_minus_one_radical"),
        ],
    )?;
    run.instance(r.label.clone());
    Ok(())
}

fn local(_: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    if !flag(ring, "local") {
        return Ok(());
    }
    let inputs = [r.label.as_str()];
    iff(
        "local: UWNC iff weakly nil-clean",
        &inputs,
        ring,
        vec![fact(ring, "uwnc")],
        vec![fact(ring, "weakly_nil_clean")],
    )?;
    expect(
        "local rings are clean",
        &inputs,
        ring,
        vec![(fact(ring, "clean"), true)],
    )?;
    run.instance(r.label.clone());
    Ok(())
}

// ---------------------------------------------------------------------------
// products

fn pair_product(ctx: &Context, a: &CatalogRing, b: &CatalogRing) -> Result<Option<Ring>, Counterexample> {
    let order = (a.ring.order() as u128) * (b.ring.order() as u128);
    let inputs = [a.label.as_str(), b.label.as_str()];
    let limits = ctx.limits;
    ctx.derive(
        &format!("prod({},{})", a.label, b.label),
        order,
        ctx.pair_budget,
        &inputs,
        || construct::product(&[a.ring.clone(), b.ring.clone()], &limits),
    )
}

fn p2_3(ctx: &Context, a: &CatalogRing, b: &CatalogRing, run: &mut Run) -> Res {
    let Some(p) = pair_product(ctx, a, b)? else {
        run.skipped("product above pair_budget");
        return Ok(());
    };
    let inputs = [a.label.as_str(), b.label.as_str()];
    for (x, y) in [(&a.ring, &b.ring), (&b.ring, &a.ring)] {
        if implies(
            "R UWNC and S UNC imply R x S UWNC",
            &inputs,
            &p,
            vec![fact(x, "uwnc"), fact(y, "unc")],
            vec![fact(&p, "uwnc")],
        )? {
            run.instance(format!("{} UWNC, {} UNC", x.label(), y.label()));
        }
    }
    Ok(())
}

fn p2_4(ctx: &Context, a: &CatalogRing, b: &CatalogRing, run: &mut Run) -> Res {
    let Some(p) = pair_product(ctx, a, b)? else {
        run.skipped("product above pair_budget");
        return Ok(());
    };
    let inputs = [a.label.as_str(), b.label.as_str()];
    let one_unc = Fact {
        ring: p.label().to_string(),
        element: None,
        property: format!("unc({}) or unc({})", a.label, b.label),
        observed: flag(&a.ring, "unc") || flag(&b.ring, "unc"),
    };
    let (l, r) = (
        vec![fact(&p, "uwnc")],
        vec![fact(&a.ring, "uwnc"), fact(&b.ring, "uwnc"), one_unc.clone()],
    );
    if let Err(mut cx) = iff("R x S UWNC iff both UWNC and at most one not UNC", &inputs, &p, l, r) {
        // the disjunction is not a replayable property; keep its parts instead
        cx.facts.retain(|f| f.property != one_unc.property);
        cx.facts.push(fact(&a.ring, "unc"));
        cx.facts.push(fact(&b.ring, "unc"));
        return Err(cx);
    }
    run.instance(p.label().to_string());
    Ok(())
}

fn e2_4(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    if r.label != "Z3" {
        return Ok(());
    }
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let p = derive(ctx, "prod(Z3,Z3)".into(), 9, &inputs, || {
        construct::product(&[r.ring.clone(), r.ring.clone()], &limits)
    })?
    .expect("order 9 is within any budget");
    expect("Z3 is UWNC", &inputs, &r.ring, vec![(fact(&r.ring, "uwnc"), true)])?;
    expect("Z3 x Z3 is not UWNC", &inputs, &p, vec![(fact(&p, "uwnc"), false)])?;
    run.instance("Z3 UWNC, Z3 x Z3 not UWNC");
    Ok(())
}

fn c2_6(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    for n in 2..=3 {
        let label = format!("prod({})", vec![r.label.as_str(); n].join(","));
        let Some(p) = derive(ctx, label, pow_order(r.ring.order(), n), &inputs, || {
            construct::power(&r.ring, n, &limits)
        })?
        else {
            run.skipped(format!("R^{n} above budget"));
            continue;
        };
        let claim = "R^n UWNC iff R^n UNC iff R UNC";
        iff(claim, &inputs, &p, vec![fact(&p, "uwnc")], vec![fact(&p, "unc")])?;
        iff(claim, &inputs, &p, vec![fact(&p, "unc")], vec![fact(&r.ring, "unc")])?;
        run.instance(format!("n = {n}"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// radicals, quotients, extensions

fn t2_7(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    let inputs = [r.label.as_str()];
    expect("J(R) is nil", &inputs, ring, vec![(fact(ring, "radical_nil"), true)])?;
    let q = derive(ctx, format!("{}/J", r.label), 0, &inputs, || ring.radical_quotient())?
        .expect("quotients are smaller than the ring");
    iff(
        "R UWNC iff J nil and R/J UWNC",
        &inputs,
        ring,
        vec![fact(ring, "uwnc")],
        vec![fact(ring, "radical_nil"), fact(&q, "uwnc")],
    )?;
    run.instance(format!("{}/J", r.label));

    // nil ideals generated by single radical elements
    let mut seen: Vec<Vec<u32>> = Vec::new();
    for x in ring.jacobson_radical().iter() {
        if x == ring.zero() || seen.len() >= 6 {
            continue;
        }
        let ideal = ring
            .ideal_generated(&[x])
            .map_err(|e| fail_plain("ideal generation", &inputs, ring, vec![x], e.to_string()))?;
        let ids = ideal.ids();
        if seen.contains(&ids) || ideal.len() == ring.jacobson_radical().len() {
            continue;
        }
        seen.push(ids);
        let label = format!("{}/({})", r.label, ring.describe(x).replace(' ', ""));
        let q = ring
            .quotient_labeled(&ideal, label.clone())
            .map_err(|e| fail_plain("quotient", &inputs, ring, vec![x], e.to_string()))?;
        iff(
            "R UWNC iff R/I UWNC for a nil ideal I",
            &inputs,
            ring,
            vec![fact(ring, "uwnc")],
            vec![fact(&q, "uwnc")],
        )?;
        run.instance(label);
    }
    Ok(())
}

fn c2_8(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let base = &r.ring;
    let te = derive(
        ctx,
        format!("TE({})", r.label),
        pow_order(base.order(), 2),
        &inputs,
        || construct::trivial_extension(base, &limits),
    )?;
    let mut built = Vec::new();
    built.extend(te);
    for n in 2..=3 {
        let q = derive(
            ctx,
            format!("quotpoly({},{n})", r.label),
            pow_order(base.order(), n),
            &inputs,
            || construct::quot_poly(base, n, &limits),
        )?;
        built.extend(q);
    }
    if built.is_empty() {
        run.skipped("extensions above budget");
    }
    for ext in built {
        iff(
            "extension UWNC iff R UWNC",
            &inputs,
            &ext,
            vec![fact(&ext, "uwnc")],
            vec![fact(base, "uwnc")],
        )?;
        run.instance(ext.label().to_string());
    }
    Ok(())
}

fn dt(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let Some(d) = derive(
        ctx,
        format!("DT({})", r.label),
        pow_order(r.ring.order(), 4),
        &inputs,
        || construct::dt_extension(&r.ring, &limits),
    )?
    else {
        run.skipped("DT(R) above budget");
        return Ok(());
    };
    iff(
        "DT(R,R) UWNC iff R UWNC",
        &inputs,
        &d,
        vec![fact(&d, "uwnc")],
        vec![fact(&r.ring, "uwnc")],
    )?;
    run.instance(d.label().to_string());
    Ok(())
}

fn triangular(ctx: &Context, r: &CatalogRing, n: usize) -> Result<Option<Ring>, Counterexample> {
    let limits = ctx.limits;
    derive(
        ctx,
        format!("T{n}({})", r.label),
        pow_order(r.ring.order(), n * (n + 1) / 2),
        &[r.label.as_str()],
        || construct::triangular(&r.ring, n, &limits),
    )
}

/// Both halves of the block-triangular claim for `t = [[a, M], [0, b]]`.
fn block_triangular(claim: &str, inputs: &[&str], t: &Ring, a: &Ring, b: &Ring) -> Result<(), Counterexample> {
    implies(
        claim,
        inputs,
        t,
        vec![fact(t, "uwnc")],
        vec![fact(a, "uwnc"), fact(b, "uwnc")],
    )?;
    implies(
        claim,
        inputs,
        t,
        vec![fact(a, "unc"), fact(b, "uwnc")],
        vec![fact(t, "uwnc")],
    )?;
    implies(
        claim,
        inputs,
        t,
        vec![fact(a, "uwnc"), fact(b, "unc")],
        vec![fact(t, "uwnc")],
    )?;
    Ok(())
}

fn c2_9(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let claim = "[[R,M],[0,S]] UWNC implies R, S UWNC; converse if one is UNC and the other UWNC";
    let Some(t2) = triangular(ctx, r, 2)? else {
        run.skipped("T2(R) above budget");
        return Ok(());
    };
    block_triangular(claim, &inputs, &t2, &r.ring, &r.ring)?;
    run.instance(format!("{} = [[R,R],[0,R]]", t2.label()));
    if let Some(t3) = triangular(ctx, r, 3)? {
        block_triangular(claim, &inputs, &t3, &r.ring, &t2)?;
        block_triangular(claim, &inputs, &t3, &t2, &r.ring)?;
        run.instance(format!("{} = [[R,R^2],[0,T2(R)]] = [[T2(R),R^2],[0,R]]", t3.label()));
    }
    Ok(())
}

fn skew(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let base = &r.ring;
    let mut endos = vec![EndoName::Id];
    let f = base.factors();
    if f.len() == 2 && f[0].label() == f[1].label() {
        endos.push(EndoName::Swap);
    }
    for n in 2..=3 {
        for &name in &endos {
            let label = format!("T{n}({},{})", r.label, name.as_str());
            let Some(t) = derive(ctx, label, pow_order(base.order(), n), &inputs, || {
                let alpha = construct::named_endomorphism(base, name)?;
                construct::skew_triangular(base, n, &alpha, &limits)
            })?
            else {
                run.skipped(format!("T{n}(R,α) above budget"));
                continue;
            };
            iff(
                "T_n(R,α) UWNC iff R UWNC",
                &inputs,
                &t,
                vec![fact(&t, "uwnc")],
                vec![fact(base, "uwnc")],
            )?;
            run.instance(t.label().to_string());
        }
    }
    Ok(())
}

fn p2_10(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    for n in 2..=3 {
        let Some(t) = triangular(ctx, r, n)? else {
            run.skipped(format!("T{n}(R) above budget"));
            continue;
        };
        iff(
            "T_n(R) UWNC iff R UNC",
            &inputs,
            &t,
            vec![fact(&t, "uwnc")],
            vec![fact(&r.ring, "unc")],
        )?;
        iff(
            "T_n(R) UNC iff R UNC",
            &inputs,
            &t,
            vec![fact(&t, "unc")],
            vec![fact(&r.ring, "unc")],
        )?;
        run.instance(t.label().to_string());
    }
    Ok(())
}

fn p0_2_6(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let matrix = |n: usize| -> Result<Option<Ring>, Counterexample> {
        if n == 1 {
            return Ok(Some(r.ring.clone()));
        }
        derive(
            ctx,
            format!("M{n}({})", r.label),
            pow_order(r.ring.order(), n * n),
            &inputs,
            || construct::matrix(&r.ring, n, &limits),
        )
    };
    for k in 2..=3 {
        let Some(t) = triangular(ctx, r, k)? else {
            run.skipped(format!("T{k}(R) above budget"));
            continue;
        };
        for n in 1..k {
            let m = k - n;
            let (Some(a), Some(b)) = (matrix(n)?, matrix(m)?) else {
                run.skipped(format!("M{n}(R) or M{m}(R) above budget"));
                continue;
            };
            if implies(
                "M_n(R), M_m(R) UWNC imply T_{n+m}(R) UWNC",
                &inputs,
                &t,
                vec![fact(&a, "uwnc"), fact(&b, "uwnc")],
                vec![fact(&t, "uwnc")],
            )? {
                run.instance(format!("n = {n}, m = {m}"));
            }
        }
    }
    Ok(())
}

const SUBRING: &str = "sub(M2(Z2);[[0,1],[1,1]])";

fn subr(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    if r.label != "M2(Z2)" && r.label != SUBRING {
        return Ok(());
    }
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let t = derive(ctx, "M2(Z2)".into(), 16, &inputs, || {
        construct::matrix(&construct::zn(2, &limits)?, 2, &limits)
    })?
    .expect("order 16");
    let u = t
        .parse_element("[[0,1],[1,1]]")
        .map_err(|e| fail_plain("element literal", &inputs, &t, vec![], e.to_string()))?;
    let claim = "subring generated by u = [[0,1],[1,1]]";
    if t.pow(u, 3) != t.one() {
        return Err(fail_plain(claim, &inputs, &t, vec![u], "u^3 != 1".into()));
    }
    let s = derive(ctx, SUBRING.into(), 0, &inputs, || t.subring_generated(&[u]))?.expect("subring");
    let expected: Vec<String> = [t.zero(), t.one(), u, t.mul(u, u)]
        .iter()
        .map(|&x| t.describe(x))
        .collect();
    let mut got: Vec<String> = s.elements().map(|x| s.describe(x)).collect();
    let mut want = expected.clone();
    got.sort();
    want.sort();
    if got != want {
        return Err(fail_plain(
            claim,
            &inputs,
            &s,
            vec![],
            format!("R = {{{}}} instead of {{0,1,u,u^2}}", got.join(", ")),
        ));
    }
    let su = s
        .parse_element("[[0,1],[1,1]]")
        .map_err(|e| fail_plain(claim, &inputs, &s, vec![], e.to_string()))?;
    expect(
        claim,
        &inputs,
        &s,
        vec![
            (fact(&s, "reduced"), true),
            (efact(&s, su, "weakly_nil_clean"), false),
            (fact(&s, "uwnc"), false),
            (fact(&t, "uwnc"), true),
        ],
    )?;
    run.instance(
        "u^3 = 1, R = {0,1,u,u^2} reduced, u not weakly nil-clean in R, R not UWNC, T UWNC; \
         note: the source's closing sentence concludes with T where the computation concerns R",
    );
    Ok(())
}

fn p2_12(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let ring = &r.ring;
    let inputs = [r.label.as_str()];
    let weakly = flag(ring, "weakly_nil_clean");
    let uwnc = flag(ring, "uwnc");
    if !weakly && !uwnc {
        return Ok(());
    }
    let z = derive(ctx, format!("Z({})", r.label), 0, &inputs, || ring.center_ring())?.expect("center");
    if implies(
        "R weakly nil-clean implies Z(R) strongly weakly nil-clean",
        &inputs,
        &z,
        vec![fact(ring, "weakly_nil_clean")],
        vec![fact(&z, "strongly_weakly_nil_clean")],
    )? {
        run.instance(format!("{} weakly nil-clean", r.label));
    }
    if implies(
        "R UWNC implies Z(R) WUU",
        &inputs,
        &z,
        vec![fact(ring, "uwnc")],
        vec![fact(&z, "wuu")],
    )? {
        run.instance(format!("{} UWNC", r.label));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Morita contexts

fn cell_members(base: &Ring, cell: Cell) -> Vec<ElementId> {
    match cell {
        Cell::Full => base.elements().collect(),
        Cell::Zero => vec![base.zero()],
        Cell::Multiple(k) => {
            let mut v: Vec<ElementId> = base.elements().map(|x| base.int_multiple(x, k as u64)).collect();
            v.sort();
            v.dedup();
            v
        }
    }
}

/// Trace ideal generated by products `m·n` inside `base`; `None` when not nilpotent.
fn trace_nilpotency(base: &Ring, left: &[ElementId], right: &[ElementId]) -> crate::Result<Option<u32>> {
    let mut gens: Vec<ElementId> = left
        .iter()
        .flat_map(|&m| right.iter().map(move |&n| base.mul(m, n)))
        .collect();
    gens.sort();
    gens.dedup();
    let ideal = base.ideal_generated(&gens)?;
    Ok(base.ideal_nilpotency_degree(&ideal))
}

/// A context `[[A, M], [N, A]]` over `base` together with its trace degrees.
struct Morita {
    ring: Ring,
    base: Ring,
    mn: Option<u32>,
    nm: Option<u32>,
    description: String,
}

fn morita_contexts(ctx: &Context, r: &CatalogRing) -> Result<Vec<Morita>, Counterexample> {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let plain = |e: RingError| fail_plain("trace ideal", &inputs, &r.ring, vec![], e.to_string());
    let mut out = Vec::new();
    match spec_of(r) {
        Some(RingSpec::Ks { base, .. }) | Some(RingSpec::FormalMatrix { n: 2, base, .. }) => {
            let b = build_spec(ctx, &base, &inputs)?;
            let s = match spec_of(r) {
                Some(RingSpec::Ks { s, .. }) => b.int(s as i64),
                Some(RingSpec::FormalMatrix { s, .. }) => b.pow(b.int(s as i64), 2),
                _ => unreachable!(),
            };
            let d = trace_nilpotency(&b, &[s], &[b.one()]).map_err(plain)?;
            out.push(Morita {
                ring: r.ring.clone(),
                base: b,
                mn: d,
                nm: d,
                description: format!("{} with MN = NM = sR", r.label),
            });
        }
        Some(RingSpec::Constrained { base, rows })
            if rows.len() == 2 && rows[0][0] == Cell::Full && rows[1][1] == Cell::Full =>
        {
            let b = build_spec(ctx, &base, &inputs)?;
            let m = cell_members(&b, rows[0][1]);
            let n = cell_members(&b, rows[1][0]);
            out.push(Morita {
                ring: r.ring.clone(),
                mn: trace_nilpotency(&b, &m, &n).map_err(plain)?,
                nm: trace_nilpotency(&b, &n, &m).map_err(plain)?,
                base: b,
                description: format!("{} with A = B = base", r.label),
            });
        }
        _ => {}
    }
    for (k, s) in integer_nilpotents(&r.ring) {
        let label = format!("K({k})({})", r.label);
        let Some(ks) = derive(ctx, label, pow_order(r.ring.order(), 4), &inputs, || {
            construct::k_s_ring(&r.ring, s, &limits)
        })?
        else {
            break;
        };
        let d = trace_nilpotency(&r.ring, &[s], &[r.ring.one()]).map_err(plain)?;
        out.push(Morita {
            description: format!("{} with MN = NM = {k}R", ks.label()),
            ring: ks,
            base: r.ring.clone(),
            mn: d,
            nm: d,
        });
    }
    Ok(out)
}

fn morita_claim(claim: &str, inputs: &[&str], m: &Morita) -> Res {
    block_triangular(claim, inputs, &m.ring, &m.base, &m.base)
}

fn p2_16(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let contexts = morita_contexts(ctx, r)?;
    if contexts.is_empty() {
        run.skipped("no Morita context within budget");
    }
    for m in contexts {
        if m.mn.is_none() || m.nm.is_none() {
            run.skipped(format!("{}: trace ideals not nilpotent", m.ring.label()));
            continue;
        }
        morita_claim(
            "Morita context with nilpotent MN, NM: ring UWNC implies A, B UWNC; converse if one is UNC and the other UWNC",
            &inputs,
            &m,
        )?;
        run.instance(m.description);
    }
    Ok(())
}

fn mor_z4(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    if r.label != "cmat(Z4;R,R;2R,R)" {
        return Ok(());
    }
    let inputs = [r.label.as_str()];
    let contexts = morita_contexts(ctx, r)?;
    let m = contexts
        .iter()
        .find(|m| m.ring.same(&r.ring))
        .ok_or_else(|| fail_plain("Morita context", &inputs, &r.ring, vec![], "not recognized".into()))?;
    if m.mn.is_none() || m.nm.is_none() {
        return Err(fail_plain(
            "[[Z4,Z4],[2Z4,Z4]]",
            &inputs,
            &r.ring,
            vec![],
            "trace ideals are not nilpotent".into(),
        ));
    }
    expect(
        "[[Z4,Z4],[2Z4,Z4]] is UWNC with Z4 UNC",
        &inputs,
        &r.ring,
        vec![(fact(&m.base, "unc"), true), (fact(&r.ring, "uwnc"), true)],
    )?;
    run.instance("Z4 UNC, trace ideals nilpotent, context UWNC");
    Ok(())
}

fn c2_17(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let claim = "s ∈ Z(R) ∩ Nil(R): K_s(R) UWNC implies R UWNC; converse if R is UNC";
    for m in morita_contexts(ctx, r)? {
        let is_ks = m.ring.label().starts_with("K(");
        if !is_ks {
            continue;
        }
        if m.mn.is_none() {
            run.skipped(format!("{}: s not nilpotent", m.ring.label()));
            continue;
        }
        implies(
            claim,
            &inputs,
            &m.ring,
            vec![fact(&m.ring, "uwnc")],
            vec![fact(&m.base, "uwnc")],
        )?;
        implies(
            claim,
            &inputs,
            &m.ring,
            vec![fact(&m.base, "unc")],
            vec![fact(&m.ring, "uwnc")],
        )?;
        run.instance(m.ring.label().to_string());
    }
    Ok(())
}

fn k_z4(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    if r.label != "K(2)(Z4)" {
        return Ok(());
    }
    let inputs = [r.label.as_str()];
    let z4 = build_spec(ctx, &RingSpec::Zn(4), &inputs)?;
    expect(
        "K_2(Z4) is UWNC with Z4 UNC",
        &inputs,
        &r.ring,
        vec![(fact(&z4, "unc"), true), (fact(&r.ring, "uwnc"), true)],
    )?;
    run.instance("Z4 UNC, K(2)(Z4) UWNC");
    Ok(())
}

fn same_tables(a: &Ring, b: &Ring) -> Option<(ElementId, ElementId)> {
    if a.order() != b.order() {
        return Some((a.zero(), a.zero()));
    }
    a.elements().find_map(|x| {
        a.elements()
            .find(|&y| a.mul(x, y) != b.mul(x, y) || a.add(x, y) != b.add(x, y))
            .map(|y| (x, y))
    })
}

fn fm(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let claim = "s ∈ Z(R) ∩ Nil(R): M_n(R;s) UWNC implies R UWNC; converse if R is UNC";
    // (ring, base, s, n)
    let mut instances: Vec<(Ring, Ring, ElementId, usize)> = Vec::new();
    if let Some(RingSpec::FormalMatrix { n, s, base }) = spec_of(r) {
        let b = build_spec(ctx, &base, &inputs)?;
        let s = b.int(s as i64);
        instances.push((r.ring.clone(), b, s, n));
    }
    for (k, s) in integer_nilpotents(&r.ring) {
        for n in 2..=3 {
            let label = format!("FM{n}({k})({})", r.label);
            if let Some(f) = derive(ctx, label, pow_order(r.ring.order(), n * n), &inputs, || {
                construct::formal_matrix(&r.ring, n, s, &limits)
            })? {
                instances.push((f, r.ring.clone(), s, n));
            }
        }
    }
    if instances.is_empty() {
        run.skipped("no formal matrix ring within budget");
    }
    for (f, base, s, n) in instances {
        if !base.is_nilpotent(s) {
            run.skipped(format!("{}: s not nilpotent", f.label()));
            continue;
        }
        implies(claim, &inputs, &f, vec![fact(&f, "uwnc")], vec![fact(&base, "uwnc")])?;
        implies(claim, &inputs, &f, vec![fact(&base, "unc")], vec![fact(&f, "uwnc")])?;
        if n == 2 {
            let s2 = base.mul(s, s);
            let k = construct::k_s_ring(&base, s2, &limits)
                .map_err(|e| fail_plain("K_{s^2}", &inputs, &base, vec![s2], e.to_string()))?;
            if let Some((x, y)) = same_tables(&f, &k) {
                return Err(fail_plain(
                    "M_2(R;s) has the tables of K_{s^2}(R)",
                    &inputs,
                    &f,
                    vec![x, y],
                    format!("tables differ from {} at ({}, {})", k.label(), x.0, y.0),
                ));
            }
            run.instance(format!("{} = {} as tables", f.label(), k.label()));
        } else {
            run.instance(f.label().to_string());
        }
    }
    Ok(())
}

fn trivm(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let claim = "trivial Morita context UWNC implies A, B UWNC; converse if one is UNC and the other UWNC";
    let mut contexts: Vec<(Ring, Ring)> = Vec::new();
    if let Some(RingSpec::Ks { s: 0, base }) = spec_of(r) {
        contexts.push((r.ring.clone(), build_spec(ctx, &base, &inputs)?));
    }
    let zero = r.ring.zero();
    if let Some(k0) = derive(
        ctx,
        format!("K(0)({})", r.label),
        pow_order(r.ring.order(), 4),
        &inputs,
        || construct::k_s_ring(&r.ring, zero, &limits),
    )? {
        contexts.push((k0, r.ring.clone()));
    }
    if let Some(t2) = triangular(ctx, r, 2)? {
        contexts.push((t2, r.ring.clone()));
    }
    if contexts.is_empty() {
        run.skipped("no trivial context within budget");
    }
    for (t, a) in contexts {
        block_triangular(claim, &inputs, &t, &a, &a)?;
        run.instance(t.label().to_string());
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// retractions and group rings

struct Retraction {
    total: Ring,
    base: Ring,
    projection: crate::ring::RingMap,
    inclusion: crate::ring::RingMap,
    kernel_nil: bool,
}

fn retraction_of(total: &Ring, base: &Ring, k: u32) -> crate::Result<Retraction> {
    let scale = pow_order(base.order(), k as usize - 1) as u32;
    let projection = crate::ring::RingMap::from_fn(total, base, |x| ElementId(x.0 / scale))?;
    let inclusion = crate::ring::RingMap::from_fn(base, total, |r| ElementId(r.0 * scale))?;
    let kernel_nil = projection.kernel().is_subset(total.nilpotents());
    Ok(Retraction {
        total: total.clone(),
        base: base.clone(),
        projection,
        inclusion,
        kernel_nil,
    })
}

fn from_group_ring(g: &GroupRing) -> Retraction {
    Retraction {
        total: g.ring.clone(),
        base: g.base.clone(),
        projection: g.augmentation.clone(),
        inclusion: g.inclusion.clone(),
        kernel_nil: g.augmentation_ideal.members().is_subset(g.ring.nilpotents()),
    }
}

/// Group rings from a catalog entry and over a catalog ring.
fn group_rings(ctx: &Context, r: &CatalogRing) -> Result<Vec<GroupRing>, Counterexample> {
    let inputs = [r.label.as_str()];
    let limits = ctx.limits;
    let mut out = Vec::new();
    if let Some(spec @ RingSpec::GroupRing { .. }) = spec_of(r) {
        let g = ctx.derive_group_ring(&r.label, 0, &inputs, || {
            spec.build_group_ring(&limits)
                .map_err(|e| RingError::InvalidGroup(e.to_string()))
        })?;
        out.extend(g);
    }
    for orders in [&[2u32][..], &[3], &[4], &[2, 2]] {
        let group_order: u32 = orders.iter().product();
        let group = FiniteGroup::cyclic_product(orders).expect("valid cyclic orders");
        let label = format!("GR({},{})", r.label, group.label());
        let g = ctx.derive_group_ring(&label, pow_order(r.ring.order(), group_order as usize), &inputs, || {
            construct::group_ring(&r.ring, &group, &limits)
        })?;
        out.extend(g);
    }
    Ok(out)
}

fn retr(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    let mut retractions: Vec<Retraction> = group_rings(ctx, r)?.iter().map(from_group_ring).collect();
    let coords = match spec_of(r) {
        Some(RingSpec::TrivialExtension(b)) => Some((b, 2)),
        Some(RingSpec::DoubleTrivialExtension(b)) => Some((b, 4)),
        Some(RingSpec::QuotPoly { base, n }) => Some((base, n as u32)),
        Some(RingSpec::Triangular { n, base, endo: Some(_) }) => Some((base, n as u32)),
        _ => None,
    };
    if let Some((base, k)) = coords {
        let b = build_spec(ctx, &base, &inputs)?;
        let rt = retraction_of(&r.ring, &b, k)
            .map_err(|e| fail_plain("retraction", &inputs, &r.ring, vec![], e.to_string()))?;
        retractions.push(rt);
    }
    for rt in retractions {
        let report = rt.projection.verify_retraction(&rt.inclusion);
        if let Some(f) = report.failure {
            return Err(fail_plain(
                "ε maps Nil, U, Id of S onto those of R",
                &inputs,
                &rt.total,
                vec![],
                f,
            ));
        }
        let (s, b) = (&rt.total, &rt.base);
        for class in ["uwnc", "wuu"] {
            implies(
                "S in the class implies R in the class",
                &inputs,
                s,
                vec![fact(s, class)],
                vec![fact(b, class)],
            )?;
            if rt.kernel_nil {
                implies(
                    "R in the class and ker ε ⊆ Nil(S) imply S in the class",
                    &inputs,
                    s,
                    vec![fact(b, class)],
                    vec![fact(s, class)],
                )?;
            }
        }
        run.instance(format!(
            "{} -> {} (ker ε {}nil)",
            s.label(),
            b.label(),
            if rt.kernel_nil { "" } else { "not " }
        ));
    }
    Ok(())
}

fn gr(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    for g in group_rings(ctx, r)? {
        let (s, b) = (&g.ring, &g.base);
        let delta_nil = g.augmentation_ideal.members().is_subset(s.nilpotents());
        for class in ["uwnc", "wuu"] {
            implies(
                "RG in the class implies R in the class",
                &inputs,
                s,
                vec![fact(s, class)],
                vec![fact(b, class)],
            )?;
            if delta_nil {
                implies(
                    "R in the class and Δ(G) ⊆ Nil(RG) imply RG in the class",
                    &inputs,
                    s,
                    vec![fact(b, class)],
                    vec![fact(s, class)],
                )?;
            }
        }
        run.instance(format!("{} (Δ {}nil)", s.label(), if delta_nil { "" } else { "not " }));
    }
    Ok(())
}

fn grp(ctx: &Context, r: &CatalogRing, run: &mut Run) -> Res {
    let inputs = [r.label.as_str()];
    for g in group_rings(ctx, r)? {
        let Some(p) = g.group.p_group_prime() else {
            continue;
        };
        let (s, b) = (&g.ring, &g.base);
        let p_one = b.int(p as i64);
        if !b.is_nilpotent(p_one) {
            run.skipped(format!("{}: {p} not nilpotent in {}", s.label(), b.label()));
            continue;
        }
        let delta = g.augmentation_ideal.members();
        if let Some(x) = delta.iter().find(|&x| !s.is_nilpotent(x)) {
            return Err(counterexample(
                &inputs,
                s,
                vec![efact(s, x, "nilpotent")],
                format!(
                    "Δ(G) is nil for a {p}-group with {p} nilpotent: element {} is not",
                    s.describe(x)
                ),
            ));
        }
        let mut applied = false;
        for class in ["uwnc", "wuu"] {
            applied |= implies(
                "R in the class, p ∈ Nil(R), G a p-group imply RG in the class",
                &inputs,
                s,
                vec![fact(b, class)],
                vec![fact(s, class)],
            )?;
        }
        if applied {
            run.instance(format!("{} with p = {p}", s.label()));
        } else {
            run.skipped(format!("{}: {} not UWNC", s.label(), b.label()));
        }
    }
    Ok(())
}
