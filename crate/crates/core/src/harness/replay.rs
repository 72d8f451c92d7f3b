use thiserror::Error;

use crate::classify::{self, uniquely_weakly_flag, Interpretation, Mode};
use crate::spec::{build_ring, SpecError};
use crate::{ElementId, Limits, Ring, RingError};

use super::{Counterexample, Fact};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("cannot rebuild `{label}`: {source}")]
    Derived { label: String, source: RingError },
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
}

/// Rebuilds a ring from a label produced by the harness: a ring spec, a
/// center `Z(<label>)`, a radical quotient `<label>/J`, or a quotient by a
/// principal ideal `<label>/(<element>)`.
pub fn resolve(label: &str, limits: &Limits) -> Result<Ring, ReplayError> {
    let derived = |source| ReplayError::Derived {
        label: label.to_string(),
        source,
    };
    if let Some((base, ideal)) = split_quotient(label) {
        let ring = resolve(base, limits)?;
        if ideal == "J" {
            return ring.radical_quotient().map_err(derived);
        }
        let inner = ideal
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(ideal);
        let x = ring.parse_element(inner).map_err(derived)?;
        let i = ring.ideal_generated(&[x]).map_err(derived)?;
        return ring.quotient_labeled(&i, label).map_err(derived);
    }
    if let Some(inner) = label.strip_prefix("Z(").and_then(|s| s.strip_suffix(')')) {
        return resolve(inner, limits)?.center_ring().map_err(derived);
    }
    Ok(build_ring(label, limits)?)
}

/// Splits at the last `/` outside brackets.
fn split_quotient(label: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in label.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '/' if depth == 0 => split = Some(i),
            _ => {}
        }
    }
    split.map(|i| (&label[..i], &label[i + 1..]))
}

/// Evaluates a named ring property (`element == None`) or element property.
pub fn evaluate_property(ring: &Ring, element: Option<ElementId>, property: &str) -> Option<bool> {
    match element {
        None => ring_property(ring, property),
        Some(x) => element_property(ring, x, property),
    }
}

fn ring_property(ring: &Ring, property: &str) -> Option<bool> {
    let p = classify::profile(ring);
    if let Some((_, v)) = p.flags.entries().into_iter().find(|(name, _)| *name == property) {
        return Some(v);
    }
    let j = ring.jacobson_radical();
    let value = match property {
        "two_in_j" => p.facts.two_in_j,
        "two_in_u" => p.facts.two_in_u,
        "commutative" => p.facts.commutative,
        "radical_nil" => j.iter().all(|x| ring.is_nilpotent(x)),
        "radical_is_nil_set" => j.members().same_members(ring.nilpotents()),
        "units_are_plus_minus_one_radical" => ring
            .units()
            .iter()
            .all(|u| j.contains(ring.sub(u, ring.one())) || j.contains(ring.add(u, ring.one()))),
        "uniquely_weakly_nil_clean_ring" => uniquely_weakly_flag(ring, Interpretation::RingLevel).ring_level,
        "units_uniquely_weakly_nil_clean" => uniquely_weakly_flag(ring, Interpretation::ElementLevel).element_level,
        "all_units_strongly_weakly_nil_clean" => ring
            .units()
            .iter()
            .all(|u| !classify::decompositions(ring, u, Mode::StronglyWeakly).is_empty()),
        _ => return None,
    };
    Some(value)
}

fn element_property(ring: &Ring, x: ElementId, property: &str) -> Option<bool> {
    if !ring.contains(x) {
        return Some(false);
    }
    let has = |mode| !classify::decompositions(ring, x, mode).is_empty();
    let value = match property {
        "unit" => ring.is_unit(x),
        "nilpotent" => ring.is_nilpotent(x),
        "idempotent" => ring.mul(x, x) == x,
        "central" => ring.is_central(x),
        "in_radical" => ring.jacobson_radical().contains(x),
        "nil_clean" => has(Mode::NilClean),
        "weakly_nil_clean" => has(Mode::Weakly),
        "strongly_nil_clean" => has(Mode::Strongly),
        "strongly_weakly_nil_clean" => has(Mode::StronglyWeakly),
        "uniquely_nil_clean" => classify::decompositions(ring, x, Mode::NilClean).len() == 1,
        "uniquely_weakly_nil_clean" => classify::decompositions(ring, x, Mode::Weakly).len() == 1,
        "plus_minus_one_nil" => classify::in_plus_minus_one_nil(ring, x),
        "squares_to_one" => ring.mul(x, x) == ring.one(),
        "minus_one_nilpotent" => ring.is_nilpotent(ring.sub(x, ring.one())),
        _ => return None,
    };
    Some(value)
}

/// Recomputes every fact of a counterexample from its ring labels.
/// Returns each fact paired with whether the recomputed value matches.
pub fn replay(cx: &Counterexample, limits: &Limits) -> Result<Vec<(Fact, bool)>, ReplayError> {
    let mut out = Vec::with_capacity(cx.facts.len());
    for fact in &cx.facts {
        let ring = resolve(&fact.ring, limits)?;
        let value = evaluate_property(&ring, fact.element, &fact.property)
            .ok_or_else(|| ReplayError::UnknownProperty(fact.property.clone()))?;
        out.push((fact.clone(), value == fact.observed));
    }
    Ok(out)
}
