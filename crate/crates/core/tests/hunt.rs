use finring::classify::Interpretation;
use finring::harness::{replay, Catalog};
use finring::hunt::{evaluate, hunt, HuntCaps, HuntStatus, Target};
use finring::spec::build_ring;
use finring::Limits;

fn small(keep: &[&str], max_zn: u32) -> (Catalog, HuntCaps) {
    (
        Catalog::default_catalog().restricted(keep),
        HuntCaps {
            max_zn,
            families: false,
        },
    )
}

#[test]
fn targets_parse_case_insensitively() {
    assert_eq!("conj-2".parse::<Target>().unwrap(), Target::Conj2);
    assert!("CONJ-9".parse::<Target>().is_err());
}

#[test]
fn conj2_holds_on_z6() {
    let (c, caps) = small(&["Z6"], 1);
    let rep = hunt(Target::Conj2, &c, &caps);
    assert_eq!(rep.status, HuntStatus::NoCounterexampleFound);
    assert_eq!(rep.rings_scanned, 1);
    assert!(rep.rows.iter().all(|r| r.holds));
    assert_eq!(rep.exit_code(), 0);
}

#[test]
fn conj1_readings_on_z2_and_z4() {
    let z2 = build_ring("Z2", &Limits::default()).unwrap();
    let (rows, cxs) = evaluate(Target::Conj1, &z2);
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.holds && r.lhs.value && r.rhs.value));
    assert!(cxs.is_empty());

    // Z4 is WUU, but the unit 1 = 1 + 0 = -1 + 2 has two weak decompositions.
    let z4 = build_ring("Z4", &Limits::default()).unwrap();
    let (rows, cxs) = evaluate(Target::Conj1, &z4);
    let element = rows
        .iter()
        .find(|r| r.reading == Some(Interpretation::ElementLevel))
        .unwrap();
    assert!(element.lhs.value && !element.rhs.value && !element.holds);
    assert_eq!(cxs.len(), 1);
    let facts = replay(&cxs[0], &Limits::default()).unwrap();
    assert!(facts.iter().all(|(_, ok)| *ok));
}

#[test]
fn prob3_applicability_tracks_hypotheses() {
    let (c, caps) = small(&["Z6", "prod(Z3,Z3)"], 12);
    let rep = hunt(Target::Prob3, &c, &caps);
    let z33 = rep.rows.iter().find(|r| r.ring == "prod(Z3,Z3)").unwrap();
    assert!(!z33.applicable && z33.holds);
    let z6 = rep.rows.iter().find(|r| r.ring == "Z6").unwrap();
    assert!(z6.applicable && z6.rhs.value);
    assert!(!rep.partial);
}

#[test]
fn gated_catalog_entries_mark_the_scan_partial() {
    let (c, caps) = small(&["Z4", "T3(Z4)"], 3);
    let rep = hunt(Target::Prob4, &c, &caps);
    assert!(rep.partial);
    assert!(rep.skipped.iter().any(|s| s.contains("T3(Z4)")));
}

#[test]
fn prob5_tabulates_matrix_rings() {
    let (c, caps) = small(&["Z2", "Z3", "Z4"], 1);
    let rep = hunt(Target::Prob5, &c, &caps);
    assert_eq!(rep.status, HuntStatus::Tabulated);
    assert!(rep
        .matrix_table
        .iter()
        .any(|m| m.base == "Z2" && m.n == 2 && m.matrix_uwnc));
    assert!(rep
        .matrix_table
        .iter()
        .any(|m| m.base == "Z3" && m.n == 2 && !m.matrix_uwnc));
    assert_eq!(rep.candidate_fits.len(), 7);
}
