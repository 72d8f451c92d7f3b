//! Counterexample search for the open conjectures and problems.
//!
//! Each target is a claim stated through classifier flags. The hunter
//! evaluates it on catalog rings, on `Z_n` up to a cap and on `T_2`/`K_s`
//! over catalog rings, and emits replayable certificates for every ring
//! where the claim fails. It never asserts that a conjecture holds.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{self, uniquely_weakly_flag, Interpretation};
use crate::construct;
use crate::harness::{evaluate_property, Catalog, Counterexample, Fact};
use crate::{Limits, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Target {
    #[serde(rename = "CONJ-1")]
    Conj1,
    #[serde(rename = "CONJ-2")]
    Conj2,
    #[serde(rename = "PROB-3")]
    Prob3,
    #[serde(rename = "PROB-4")]
    Prob4,
    #[serde(rename = "PROB-5")]
    Prob5,
}

impl Target {
    pub const ALL: [Target; 5] = [
        Target::Conj1,
        Target::Conj2,
        Target::Prob3,
        Target::Prob4,
        Target::Prob5,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Target::Conj1 => "CONJ-1",
            Target::Conj2 => "CONJ-2",
            Target::Prob3 => "PROB-3",
            Target::Prob4 => "PROB-4",
            Target::Prob5 => "PROB-5",
        }
    }

    pub fn claim(self) -> &'static str {
        match self {
            Target::Conj1 => "R is WUU iff every unit of R is uniquely weakly nil-clean",
            Target::Conj2 => "R is strongly weakly nil-clean iff R is semipotent and WUU",
            Target::Prob3 => "a clean UWNC ring is weakly nil-clean",
            Target::Prob4 => "a semiperfect UWNC ring is weakly nil-clean",
            Target::Prob5 => "find a criterion on R for M_n(R) to be UWNC",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown hunt target `{0}` (expected CONJ-1, CONJ-2, PROB-3, PROB-4 or PROB-5)")]
pub struct UnknownTarget(pub String);

impl FromStr for Target {
    type Err = UnknownTarget;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Target::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownTarget(s.to_string()))
    }
}

/// Which rings the hunter scans besides the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HuntCaps {
    /// Residue rings `Z_n` for `2 <= n <= max_zn`.
    pub max_zn: u32,
    /// Include `T_2(R)` and `K_s(R)` over catalog rings.
    pub families: bool,
}

impl Default for HuntCaps {
    fn default() -> Self {
        HuntCaps {
            max_zn: 100,
            families: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HuntStatus {
    NoCounterexampleFound,
    Counterexample,
    /// Evidence table only (no claim to refute).
    Tabulated,
}

/// One side of a claim evaluated on one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Side {
    pub name: String,
    pub value: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingRow {
    pub ring: String,
    pub order: usize,
    /// Reading of the claim, for targets with more than one.
    pub reading: Option<Interpretation>,
    /// False when the claim's hypotheses do not hold on this ring.
    pub applicable: bool,
    pub lhs: Side,
    pub rhs: Side,
    pub holds: bool,
}

/// `UWNC(M_n(R))` next to candidate criteria on `R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixRow {
    pub base: String,
    pub n: usize,
    pub matrix_uwnc: bool,
    pub candidates: Vec<Side>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateFit {
    pub candidate: String,
    pub matches_all: bool,
    /// Rows (as `M_n(R)`) where the candidate disagrees with the data.
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HuntReport {
    pub target: Target,
    pub claim: &'static str,
    pub note: Option<String>,
    pub rings_scanned: usize,
    /// Some requested rings were skipped because of size caps.
    pub partial: bool,
    pub skipped: Vec<String>,
    pub status: HuntStatus,
    pub rows: Vec<RingRow>,
    pub counterexamples: Vec<Counterexample>,
    pub matrix_table: Vec<MatrixRow>,
    pub candidate_fits: Vec<CandidateFit>,
}

impl HuntReport {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.status == HuntStatus::Counterexample)
    }
}

const PROB4_NOTE: &str =
    "every finite ring is semiperfect (R/J(R) is semisimple and idempotents lift modulo the nil ideal J(R)), \
     so over finite rings the question is whether UWNC rings are weakly nil-clean";
const CONJ1_NOTE: &str = "\"uniquely weakly nil-clean\" for a unit is read two ways: ring-level (R is weakly nil-clean and every \
     nil-clean element has a unique nil-clean decomposition) and element-level (every unit has exactly one weakly nil-clean \
     decomposition, counting ±e once); both are reported";
const PROB5_NOTE: &str =
    "no criterion is asserted; the table lists UWNC(M_n(R)) for n = 2, 3 within budget next to candidate \
     conditions on R";

/// Rings to scan, in canonical order: catalog entries, `Z_n`, then families.
fn scan_set(catalog: &Catalog, caps: &HuntCaps) -> (Vec<Ring>, Vec<String>) {
    let limits = catalog.limits();
    let mut rings: Vec<Ring> = Vec::new();
    let mut skipped = Vec::new();
    let push = |rings: &mut Vec<Ring>, r: Ring| {
        if !rings.iter().any(|x| x.label() == r.label()) {
            rings.push(r);
        }
    };
    for spec in &catalog.specs {
        if spec.order_bound() > catalog.budget as u128 {
            skipped.push(format!("{spec}: above budget {}", catalog.budget));
            continue;
        }
        match spec.build(&limits) {
            Ok(r) => push(&mut rings, r),
            Err(e) => skipped.push(format!("{spec}: {e}")),
        }
    }
    let bases: Vec<Ring> = rings.clone();
    for n in 2..=caps.max_zn {
        if n as usize > catalog.budget {
            skipped.push(format!("Z{n}: above budget {}", catalog.budget));
            break;
        }
        match construct::zn(n, &limits) {
            Ok(r) => push(&mut rings, r),
            Err(e) => skipped.push(format!("Z{n}: {e}")),
        }
    }
    if caps.families {
        let family: Vec<Ring> = bases
            .par_iter()
            .flat_map_iter(|b| family_over(b, catalog.budget, &limits))
            .collect();
        for r in family {
            push(&mut rings, r);
        }
    }
    (rings, skipped)
}

/// `T_2(R)` and `K_s(R)` for integer nilpotent `s`, within budget.
fn family_over(base: &Ring, budget: usize, limits: &Limits) -> Vec<Ring> {
    let mut out = Vec::new();
    let n = base.order() as u128;
    if n.pow(3) <= budget as u128 {
        out.extend(construct::triangular(base, 2, limits));
    }
    if n.pow(4) <= budget as u128 {
        let mut seen = Vec::new();
        let mut acc = base.zero();
        for _ in 0..base.characteristic() {
            if !seen.contains(&acc) && base.is_nilpotent(acc) {
                out.extend(construct::k_s_ring(base, acc, limits));
            }
            seen.push(acc);
            acc = base.add(acc, base.one());
        }
    }
    out
}

fn side(name: &str, value: bool) -> Side {
    Side {
        name: name.to_string(),
        value,
    }
}

fn flag(ring: &Ring, property: &str) -> bool {
    evaluate_property(ring, None, property).expect("known property")
}

fn fact(ring: &Ring, property: &str) -> Fact {
    Fact {
        ring: ring.label().to_string(),
        element: None,
        property: property.to_string(),
        observed: flag(ring, property),
    }
}

fn efact(ring: &Ring, x: crate::ElementId, property: &str) -> Fact {
    Fact {
        ring: ring.label().to_string(),
        element: Some(x),
        property: property.to_string(),
        observed: evaluate_property(ring, Some(x), property).expect("known property"),
    }
}

fn row(ring: &Ring, reading: Option<Interpretation>, applicable: bool, lhs: Side, rhs: Side) -> RingRow {
    RingRow {
        ring: ring.label().to_string(),
        order: ring.order(),
        reading,
        applicable,
        holds: !applicable || lhs.value == rhs.value,
        lhs,
        rhs,
    }
}

fn certificate(target: Target, ring: &Ring, facts: Vec<Fact>, detail: String) -> Counterexample {
    let mut elements = Vec::new();
    for f in &facts {
        if let Some(x) = f.element {
            elements.push(x);
        } else if !f.observed {
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
        inputs: vec![ring.label().to_string()],
        ring: ring.label().to_string(),
        elements,
        facts,
        detail: format!("{target}: {detail}"),
    }
}

/// Evaluates one target on one ring.
pub fn evaluate(target: Target, ring: &Ring) -> (Vec<RingRow>, Vec<Counterexample>) {
    let mut rows = Vec::new();
    let mut cxs = Vec::new();
    match target {
        Target::Conj1 => {
            for reading in [Interpretation::RingLevel, Interpretation::ElementLevel] {
                let rep = uniquely_weakly_flag(ring, reading);
                let (name, property) = match reading {
                    Interpretation::RingLevel => ("uniquely weakly nil-clean ring", "uniquely_weakly_nil_clean_ring"),
                    Interpretation::ElementLevel => (
                        "every unit uniquely weakly nil-clean",
                        "units_uniquely_weakly_nil_clean",
                    ),
                };
                let wuu = flag(ring, "wuu");
                let r = row(ring, Some(reading), true, side("WUU", wuu), side(name, rep.headline));
                if !r.holds {
                    let mut facts = vec![fact(ring, "wuu"), fact(ring, property)];
                    let witness = match reading {
                        Interpretation::RingLevel => rep.ring_level_witness,
                        Interpretation::ElementLevel => rep.element_level_witness,
                    };
                    if let Some(x) = witness {
                        let p = match reading {
                            Interpretation::RingLevel if flag(ring, "weakly_nil_clean") => "uniquely_nil_clean",
                            Interpretation::RingLevel => "weakly_nil_clean",
                            Interpretation::ElementLevel => "uniquely_weakly_nil_clean",
                        };
                        facts.push(efact(ring, x, p));
                    }
                    cxs.push(certificate(
                        target,
                        ring,
                        facts,
                        format!("{reading:?} reading: WUU = {wuu}, {name} = {}", rep.headline),
                    ));
                }
                rows.push(r);
            }
        }
        Target::Conj2 => {
            let swnc = flag(ring, "strongly_weakly_nil_clean");
            let rhs = flag(ring, "semipotent") && flag(ring, "wuu");
            let r = row(
                ring,
                None,
                true,
                side("strongly weakly nil-clean", swnc),
                side("semipotent and WUU", rhs),
            );
            if !r.holds {
                cxs.push(certificate(
                    target,
                    ring,
                    vec![
                        fact(ring, "strongly_weakly_nil_clean"),
                        fact(ring, "semipotent"),
                        fact(ring, "wuu"),
                    ],
                    format!("strongly weakly nil-clean = {swnc}, semipotent and WUU = {rhs}"),
                ));
            }
            rows.push(r);
        }
        Target::Prob3 | Target::Prob4 => {
            let applicable = flag(ring, "uwnc") && (target == Target::Prob4 || flag(ring, "clean"));
            let hyp = if target == Target::Prob3 {
                "clean and UWNC"
            } else {
                "UWNC (finite, so semiperfect)"
            };
            let weakly = flag(ring, "weakly_nil_clean");
            let r = row(
                ring,
                None,
                applicable,
                side(hyp, applicable),
                side("weakly nil-clean", weakly),
            );
            if !r.holds {
                let mut facts = vec![fact(ring, "uwnc"), fact(ring, "weakly_nil_clean")];
                if target == Target::Prob3 {
                    facts.insert(0, fact(ring, "clean"));
                }
                cxs.push(certificate(
                    target,
                    ring,
                    facts,
                    format!("{hyp} but not weakly nil-clean"),
                ));
            }
            rows.push(r);
        }
        Target::Prob5 => {}
    }
    (rows, cxs)
}

const CANDIDATES: [(&str, &str); 7] = [
    ("R UWNC", "uwnc"),
    ("R UNC", "unc"),
    ("R weakly nil-clean", "weakly_nil_clean"),
    ("R nil-clean", "nil_clean"),
    ("R WUU", "wuu"),
    ("R UU", "uu"),
    ("2 ∈ J(R)", "two_in_j"),
];

fn matrix_rows(bases: &[Ring], budget: usize, limits: &Limits) -> Vec<MatrixRow> {
    let jobs: Vec<(&Ring, usize)> = bases
        .iter()
        .flat_map(|b| [2usize, 3].into_iter().map(move |n| (b, n)))
        .filter(|(b, n)| (b.order() as u128).saturating_pow((n * n) as u32) <= budget as u128)
        .collect();
    jobs.par_iter()
        .filter_map(|&(b, n)| {
            let m = construct::matrix(b, n, limits).ok()?;
            Some(MatrixRow {
                base: b.label().to_string(),
                n,
                matrix_uwnc: flag(&m, "uwnc"),
                candidates: CANDIDATES.iter().map(|(name, p)| side(name, flag(b, p))).collect(),
            })
        })
        .collect()
}

fn fits(table: &[MatrixRow]) -> Vec<CandidateFit> {
    CANDIDATES
        .iter()
        .enumerate()
        .map(|(i, (name, _))| {
            let mismatches: Vec<String> = table
                .iter()
                .filter(|row| row.candidates[i].value != row.matrix_uwnc)
                .map(|row| format!("M{}({})", row.n, row.base))
                .collect();
            CandidateFit {
                candidate: name.to_string(),
                matches_all: mismatches.is_empty(),
                mismatches,
            }
        })
        .collect()
}

/// Runs one target over the catalog plus the enumerated families.
pub fn hunt(target: Target, catalog: &Catalog, caps: &HuntCaps) -> HuntReport {
    let (rings, skipped) = scan_set(catalog, caps);
    let limits = catalog.limits();
    let mut rows = Vec::new();
    let mut counterexamples = Vec::new();
    let mut matrix_table = Vec::new();
    let mut candidate_fits = Vec::new();
    if target == Target::Prob5 {
        matrix_table = matrix_rows(&rings, catalog.budget, &limits);
        candidate_fits = fits(&matrix_table);
    } else {
        let results: Vec<(Vec<RingRow>, Vec<Counterexample>)> = rings.par_iter().map(|r| evaluate(target, r)).collect();
        for (r, c) in results {
            rows.extend(r);
            counterexamples.extend(c);
        }
    }
    let status = if target == Target::Prob5 {
        HuntStatus::Tabulated
    } else if counterexamples.is_empty() {
        HuntStatus::NoCounterexampleFound
    } else {
        HuntStatus::Counterexample
    };
    let note = match target {
        Target::Conj1 => Some(CONJ1_NOTE.to_string()),
        Target::Prob4 => Some(PROB4_NOTE.to_string()),
        Target::Prob5 => Some(PROB5_NOTE.to_string()),
        _ => None,
    };
    HuntReport {
        target,
        claim: target.claim(),
        note,
        rings_scanned: rings.len(),
        partial: !skipped.is_empty(),
        skipped,
        status,
        rows,
        counterexamples,
        matrix_table,
        candidate_fits,
    }
}
