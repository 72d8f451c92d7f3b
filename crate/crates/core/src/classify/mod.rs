//! Decomposition search and ring-class decisions.
//!
//! All decisions are exhaustive: an element is weakly nil-clean when some
//! idempotent `e` makes `x - e` or `x + e` nilpotent, and a ring-level class
//! holds when every relevant element qualifies.

mod unique;

pub use unique::{uniquely_weakly_flag, Interpretation, UniquenessReport};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{ElementId, Ring};

/// Which decompositions to search for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// `x = e + n`.
    NilClean,
    /// `x = ±e + n`.
    Weakly,
    /// `x = e + n` with `en = ne`.
    Strongly,
    /// `x` or `-x` strongly nil-clean, i.e. `x = ±e + n` with `en = ne`.
    StronglyWeakly,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::NilClean, Mode::Weakly, Mode::Strongly, Mode::StronglyWeakly];

    fn signs(self) -> &'static [i8] {
        match self {
            Mode::NilClean | Mode::Strongly => &[1],
            Mode::Weakly | Mode::StronglyWeakly => &[1, -1],
        }
    }

    fn needs_commuting(self) -> bool {
        matches!(self, Mode::Strongly | Mode::StronglyWeakly)
    }
}

/// `element = sign·idempotent + nilpotent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub sign: i8,
    pub idempotent: ElementId,
    pub nilpotent: ElementId,
    pub commuting: bool,
}

impl Witness {
    /// Re-derives every invariant of the witness from ring arithmetic alone.
    pub fn recomputes(&self, ring: &Ring, x: ElementId) -> bool {
        let (e, n) = (self.idempotent, self.nilpotent);
        if !(ring.contains(e) && ring.contains(n)) || !matches!(self.sign, 1 | -1) {
            return false;
        }
        let se = if self.sign == 1 { e } else { ring.neg(e) };
        ring.add(se, n) == x
            && ring.mul(e, e) == e
            && ring.nilpotency_index(n).is_some()
            && self.commuting == ring.commutes(e, n)
    }
}

/// All decompositions of `x`, ordered by sign (+1 first) then idempotent id.
/// Witnesses with the same signed idempotent `sign·e` are reported once.
pub fn decompositions(ring: &Ring, x: ElementId, mode: Mode) -> Vec<Witness> {
    let mut out = Vec::new();
    let mut seen: Vec<ElementId> = Vec::new();
    for &sign in mode.signs() {
        for e in ring.idempotents().iter() {
            let se = if sign == 1 { e } else { ring.neg(e) };
            let n = ring.sub(x, se);
            if !ring.is_nilpotent(n) {
                continue;
            }
            let commuting = ring.commutes(e, n);
            if (mode.needs_commuting() && !commuting) || seen.contains(&se) {
                continue;
            }
            seen.push(se);
            out.push(Witness {
                sign,
                idempotent: e,
                nilpotent: n,
                commuting,
            });
        }
    }
    out
}

fn has_decomposition(ring: &Ring, x: ElementId, mode: Mode) -> bool {
    mode.signs().iter().any(|&sign| {
        ring.idempotents().iter().any(|e| {
            let se = if sign == 1 { e } else { ring.neg(e) };
            let n = ring.sub(x, se);
            ring.is_nilpotent(n) && (!mode.needs_commuting() || ring.commutes(e, n))
        })
    })
}

/// `x = e + u` with `e` idempotent and `u` a unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CleanWitness {
    pub idempotent: ElementId,
    pub unit: ElementId,
}

fn clean_witness(ring: &Ring, x: ElementId) -> Option<CleanWitness> {
    ring.idempotents().iter().find_map(|e| {
        let u = ring.sub(x, e);
        ring.is_unit(u).then_some(CleanWitness { idempotent: e, unit: u })
    })
}

/// `x ∈ 1 + Nil(R)` or `x ∈ -1 + Nil(R)`.
pub fn in_plus_minus_one_nil(ring: &Ring, x: ElementId) -> bool {
    let one = ring.one();
    ring.is_nilpotent(ring.sub(x, one)) || ring.is_nilpotent(ring.add(x, one))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementWitnesses {
    pub nil_clean: Vec<Witness>,
    pub weakly: Vec<Witness>,
    pub strongly: Vec<Witness>,
    pub strongly_weakly: Vec<Witness>,
    pub clean: Option<CleanWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementProfile {
    pub ring: String,
    pub element: ElementId,
    pub text: String,
    pub unit: bool,
    pub idempotent: bool,
    pub nilpotent: bool,
    pub unipotent: bool,
    pub central: bool,
    pub clean: bool,
    pub nil_clean: bool,
    pub weakly_nil_clean: bool,
    pub strongly_nil_clean: bool,
    pub strongly_weakly_nil_clean: bool,
    pub uniquely_nil_clean: bool,
    pub inverse: Option<ElementId>,
    pub nilpotency_index: Option<u32>,
    /// `x ∈ ±1 + Nil(R)`.
    pub plus_minus_one_nil: bool,
    /// For units: whether "strongly weakly nil-clean ⇔ x ∈ ±1 + Nil(R)"
    /// holds at this element.
    pub unit_criterion: Option<bool>,
    pub witnesses: ElementWitnesses,
}

pub fn classify_element(ring: &Ring, x: ElementId) -> ElementProfile {
    let w = ElementWitnesses {
        nil_clean: decompositions(ring, x, Mode::NilClean),
        weakly: decompositions(ring, x, Mode::Weakly),
        strongly: decompositions(ring, x, Mode::Strongly),
        strongly_weakly: decompositions(ring, x, Mode::StronglyWeakly),
        clean: clean_witness(ring, x),
    };
    let unit = ring.is_unit(x);
    let pm = in_plus_minus_one_nil(ring, x);
    let swnc = !w.strongly_weakly.is_empty();
    ElementProfile {
        ring: ring.label().to_string(),
        element: x,
        text: ring.describe(x),
        unit,
        idempotent: ring.idempotents().contains(x),
        nilpotent: ring.is_nilpotent(x),
        unipotent: ring.is_nilpotent(ring.sub(x, ring.one())),
        central: ring.is_central(x),
        clean: w.clean.is_some(),
        nil_clean: !w.nil_clean.is_empty(),
        weakly_nil_clean: !w.weakly.is_empty(),
        strongly_nil_clean: !w.strongly.is_empty(),
        strongly_weakly_nil_clean: swnc,
        uniquely_nil_clean: w.nil_clean.len() == 1,
        inverse: ring.inverse(x),
        nilpotency_index: ring.nilpotency_index(x),
        plus_minus_one_nil: pm,
        unit_criterion: unit.then_some(swnc == pm),
        witnesses: w,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingFlags {
    pub nil_clean: bool,
    pub weakly_nil_clean: bool,
    pub strongly_nil_clean: bool,
    pub strongly_weakly_nil_clean: bool,
    pub uu: bool,
    pub wuu: bool,
    pub unc: bool,
    pub uwnc: bool,
    pub clean: bool,
    pub local: bool,
    pub abelian: bool,
    pub reduced: bool,
    pub two_primal: bool,
    pub semipotent: bool,
}

impl RingFlags {
    /// `(name, value)` pairs in report order.
    pub fn entries(&self) -> [(&'static str, bool); 14] {
        [
            ("nil_clean", self.nil_clean),
            ("weakly_nil_clean", self.weakly_nil_clean),
            ("strongly_nil_clean", self.strongly_nil_clean),
            ("strongly_weakly_nil_clean", self.strongly_weakly_nil_clean),
            ("uu", self.uu),
            ("wuu", self.wuu),
            ("unc", self.unc),
            ("uwnc", self.uwnc),
            ("clean", self.clean),
            ("local", self.local),
            ("abelian", self.abelian),
            ("reduced", self.reduced),
            ("two_primal", self.two_primal),
            ("semipotent", self.semipotent),
        ]
    }

    /// Implications every ring must satisfy; returns the broken ones.
    pub fn lattice_violations(&self) -> Vec<&'static str> {
        let rules = [
            ("nil-clean => weakly nil-clean", self.nil_clean, self.weakly_nil_clean),
            ("UU => WUU", self.uu, self.wuu),
            ("UNC => UWNC", self.unc, self.uwnc),
            ("nil-clean => UNC", self.nil_clean, self.unc),
            ("weakly nil-clean => UWNC", self.weakly_nil_clean, self.uwnc),
            ("WUU => UWNC", self.wuu, self.uwnc),
            (
                "strongly nil-clean => nil-clean",
                self.strongly_nil_clean,
                self.nil_clean,
            ),
            (
                "strongly weakly nil-clean => weakly nil-clean",
                self.strongly_weakly_nil_clean,
                self.weakly_nil_clean,
            ),
        ];
        rules
            .into_iter()
            .filter(|&(_, p, q)| p && !q)
            .map(|(name, _, _)| name)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingFacts {
    pub two_in_j: bool,
    pub two_in_u: bool,
    pub characteristic: u64,
    pub commutative: bool,
    pub units: usize,
    pub idempotents: usize,
    pub nilpotents: usize,
    pub radical: usize,
    pub radical_nilpotency_degree: Option<u32>,
    /// Strongly nilpotent elements equal J(R); `None` above the oracle cap.
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingSets {
    pub units: Vec<u32>,
    pub idempotents: Vec<u32>,
    pub nilpotents: Vec<u32>,
    pub radical: Vec<u32>,
    pub center: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingProfile {
    pub label: String,
    pub order: usize,
    pub flags: RingFlags,
    pub facts: RingFacts,
    pub sets: RingSets,
    /// For each false flag, elements refuting it (first in id order).
    pub refutations: BTreeMap<&'static str, Vec<ElementId>>,
}

#[derive(Clone, Copy, Default)]
struct ElementBits {
    nil_clean: bool,
    weakly: bool,
    strongly: bool,
    strongly_weakly: bool,
    clean: bool,
}

/// The memoized profile of `ring`.
pub fn profile(ring: &Ring) -> &RingProfile {
    ring.profile_cache().get_or_init(|| build_profile(ring))
}

pub fn classify_ring(ring: &Ring) -> RingProfile {
    profile(ring).clone()
}

fn build_profile(ring: &Ring) -> RingProfile {
    let ids: Vec<ElementId> = ring.elements().collect();
    let bits: Vec<ElementBits> = ids
        .par_iter()
        .map(|&x| ElementBits {
            nil_clean: has_decomposition(ring, x, Mode::NilClean),
            weakly: has_decomposition(ring, x, Mode::Weakly),
            strongly: has_decomposition(ring, x, Mode::Strongly),
            strongly_weakly: has_decomposition(ring, x, Mode::StronglyWeakly),
            clean: clean_witness(ring, x).is_some(),
        })
        .collect();
    let units = ring.units();
    let nil = ring.nilpotents();
    let radical = ring.jacobson_radical();
    let one = ring.one();
    let first = |pred: &dyn Fn(ElementId) -> bool| ids.iter().copied().find(|&x| pred(x));
    let first_unit = |pred: &dyn Fn(ElementId) -> bool| units.iter().find(|&u| pred(u));

    let mut refutations: BTreeMap<&'static str, Vec<ElementId>> = BTreeMap::new();
    let mut note = |name: &'static str, found: Option<Vec<ElementId>>| {
        if let Some(v) = found {
            refutations.insert(name, v);
        }
        refutations.contains_key(name)
    };

    let nil_clean = !note("nil_clean", first(&|x| !bits[x.index()].nil_clean).map(|x| vec![x]));
    let weakly_nil_clean = !note("weakly_nil_clean", first(&|x| !bits[x.index()].weakly).map(|x| vec![x]));
    let strongly_nil_clean = !note(
        "strongly_nil_clean",
        first(&|x| !bits[x.index()].strongly).map(|x| vec![x]),
    );
    let strongly_weakly_nil_clean = !note(
        "strongly_weakly_nil_clean",
        first(&|x| !bits[x.index()].strongly_weakly).map(|x| vec![x]),
    );
    let uu = !note("uu", first_unit(&|u| !nil.contains(ring.sub(u, one))).map(|x| vec![x]));
    let wuu = !note("wuu", first_unit(&|u| !in_plus_minus_one_nil(ring, u)).map(|x| vec![x]));
    let unc = !note("unc", first_unit(&|u| !bits[u.index()].nil_clean).map(|x| vec![x]));
    let uwnc = !note("uwnc", first_unit(&|u| !bits[u.index()].weakly).map(|x| vec![x]));
    let clean = !note("clean", first(&|x| !bits[x.index()].clean).map(|x| vec![x]));

    let non_units: Vec<ElementId> = ids.iter().copied().filter(|&x| !units.contains(x)).collect();
    let local_break = non_units.par_iter().find_map_first(|&a| {
        non_units
            .iter()
            .find(|&&b| units.contains(ring.add(a, b)))
            .map(|&b| vec![a, b])
    });
    let local = !note("local", local_break);

    let abelian = !note(
        "abelian",
        ring.idempotents()
            .iter()
            .find(|&e| !ring.is_central(e))
            .map(|e| vec![e]),
    );
    let reduced = !note("reduced", nil.iter().find(|&x| x != ring.zero()).map(|x| vec![x]));
    let two_primal = !note(
        "two_primal",
        ids.iter()
            .copied()
            .find(|&x| nil.contains(x) != radical.contains(x))
            .map(|x| vec![x]),
    );
    let semipotent_break = ids.par_iter().find_map_first(|&a| {
        if radical.contains(a) {
            return None;
        }
        let has_idem = ring.elements().any(|r| {
            let p = ring.mul(a, r);
            p != ring.zero() && ring.mul(p, p) == p
        });
        (!has_idem).then(|| vec![a])
    });
    let semipotent = !note("semipotent", semipotent_break);

    let two = ring.int(2);
    let oracle_agrees = ring
        .lower_nilradical_oracle()
        .ok()
        .map(|o| o.same_members(radical.members()));
    RingProfile {
        label: ring.label().to_string(),
        order: ring.order(),
        flags: RingFlags {
            nil_clean,
            weakly_nil_clean,
            strongly_nil_clean,
            strongly_weakly_nil_clean,
            uu,
            wuu,
            unc,
            uwnc,
            clean,
            local,
            abelian,
            reduced,
            two_primal,
            semipotent,
        },
        facts: RingFacts {
            two_in_j: radical.contains(two),
            two_in_u: units.contains(two),
            characteristic: ring.characteristic(),
            commutative: ring.is_commutative(),
            units: units.len(),
            idempotents: ring.idempotents().len(),
            nilpotents: nil.len(),
            radical: radical.len(),
            radical_nilpotency_degree: ring.ideal_nilpotency_degree(radical),
            oracle_agrees,
        },
        sets: RingSets {
            units: units.ids(),
            idempotents: ring.idempotents().ids(),
            nilpotents: nil.ids(),
            radical: radical.ids(),
            center: ring.center().ids(),
        },
        refutations,
    }
}
