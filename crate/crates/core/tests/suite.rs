use finring::harness::{self, audit_entry, prepare, replay, run_checks, suite_from, Catalog, EntryStatus, Outcome};
use finring::{Limits, Ring};

fn catalog(keep: &[&str]) -> Catalog {
    Catalog::default_catalog().restricted(keep)
}

#[test]
fn registry_is_complete_and_unique() {
    let ids: Vec<&str> = harness::registry().iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), 31);
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for c in harness::registry() {
        assert!(!c.statement.is_empty() && !c.applicability.is_empty(), "{}", c.id);
        assert!(harness::descriptor(c.id).is_some());
    }
    assert!(harness::descriptor("CHK-NOPE").is_none());
}

#[test]
fn unknown_check_is_an_error() {
    let (entries, ctx) = prepare(&catalog(&["Z4"]));
    assert!(suite_from(entries, &ctx, &["CHK-NOPE"]).is_err());
}

#[test]
fn single_ring_catalog_skips_pair_checks() {
    let (entries, ctx) = prepare(&catalog(&["Z4"]));
    let report = suite_from(entries, &ctx, &["CHK-P2.3", "CHK-P2.4"]).unwrap();
    assert!(!report.verdicts.is_empty());
    for v in &report.verdicts {
        assert_eq!(v.outcome, Outcome::Skip, "{}", v.id);
        assert!(v.detail.contains("two catalog rings"), "{}", v.detail);
    }
    assert_eq!(report.exit_code, 0);
}

#[test]
fn local_rings_pass_the_local_check() {
    let (entries, ctx) = prepare(&catalog(&["Z4", "Z6", "Z9", "TE(Z2)"]));
    let report = suite_from(entries, &ctx, &["CHK-LOCAL"]).unwrap();
    let pass: Vec<&str> = report
        .verdicts
        .iter()
        .filter(|v| v.outcome == Outcome::Pass)
        .map(|v| v.ring.as_str())
        .collect();
    assert_eq!(pass, ["Z4", "Z9", "TE(Z2)"]);
    assert_eq!(report.counts.fail, 0);
}

fn corrupted() -> Ring {
    // Z3 with 1·1 = 2: multiplication is no longer associative with identity 1.
    let add: Vec<u32> = (0..9).map(|i| (i / 3 + i % 3) % 3).collect();
    let mut mul: Vec<u32> = (0..9).map(|i| (i / 3 * (i % 3)) % 3).collect();
    mul[4] = 2;
    Ring::from_tables("bad(Z3)", 3, add, mul, 0, 1, Limits::default()).unwrap()
}

#[test]
fn audit_failure_skips_checks_and_sets_exit_code() {
    let (report, ring) = audit_entry("bad(Z3)".into(), corrupted());
    assert_eq!(report.status, EntryStatus::AuditFailed);
    assert!(ring.is_none());
    assert!(report.detail.unwrap().contains("skipped"));

    let (mut entries, ctx) = prepare(&catalog(&["Z4"]));
    let (report, _) = audit_entry("bad(Z3)".into(), corrupted());
    entries.push(report);
    let suite = suite_from(entries, &ctx, &["CHK-L2.13"]).unwrap();
    assert_eq!(suite.exit_code, 1);
    let bad: Vec<_> = suite.verdicts.iter().filter(|v| v.ring == "bad(Z3)").collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].outcome, Outcome::Skip);
}

#[test]
fn gated_entries_are_not_built() {
    let (entries, ctx) = prepare(&catalog(&["Z4", "T3(Z4)"]));
    let gated: Vec<_> = entries.iter().filter(|e| e.status == EntryStatus::Gated).collect();
    assert_eq!(gated.len(), 1);
    assert_eq!(gated[0].spec, "T3(Z4)");
    assert_eq!(ctx.rings.len(), 1);
}

#[test]
fn triangular_counterexample_replays() {
    let (entries, ctx) = prepare(&catalog(&["Z3", "Z4"]));
    let report = suite_from(entries, &ctx, &["CHK-P0.2.6"]).unwrap();
    let fail = report
        .verdicts
        .iter()
        .find(|v| v.outcome == Outcome::Fail)
        .expect("Z3 refutes the triangular claim");
    assert_eq!(fail.ring, "Z3");
    let cx = fail.counterexample.as_ref().unwrap();
    let facts = replay(cx, &Limits::default()).unwrap();
    assert!(!facts.is_empty());
    assert!(facts.iter().all(|(_, ok)| *ok));
    assert!(facts
        .iter()
        .any(|(f, _)| f.ring == "T2(Z3)" && f.property == "uwnc" && !f.observed));
    assert_eq!(report.exit_code, 1);
}

#[test]
fn verdicts_do_not_depend_on_catalog_order() {
    let ids = ["CHK-L2.13", "CHK-P2.3", "CHK-P2.10", "CHK-2PRIM"];
    let run = |c: &Catalog| {
        let (_, ctx) = prepare(c);
        let mut v: Vec<(String, String, Outcome)> = run_checks(&ctx, &ids)
            .unwrap()
            .into_iter()
            .map(|v| {
                // a pair is labelled in catalog order
                let mut parts: Vec<&str> = v.ring.split(" , ").collect();
                parts.sort();
                (v.id.to_string(), parts.join(" , "), v.outcome)
            })
            .collect();
        v.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        v
    };
    let forward = catalog(&["Z2", "Z4", "Z6", "T2(Z2)"]);
    let mut reversed = forward.clone();
    reversed.specs.reverse();
    assert_eq!(run(&forward), run(&reversed));
}

#[test]
fn catalog_parse_reads_options_and_comments() {
    let c = Catalog::parse("budget = 64\n# comment\nZ4   # trailing\nT2(Z2)\n").unwrap();
    assert_eq!(c.budget, 64);
    assert_eq!(c.specs.len(), 2);
    assert!(Catalog::parse("Z4\nT2(Z4\n").is_err());
    assert!(Catalog::parse("budget = lots\n").is_err());
}
