use serde::{Deserialize, Serialize};

use super::{decompositions, profile, Mode};
use crate::{ElementId, Ring};

/// Reading of "uniquely weakly nil-clean" used for the headline verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    /// A weakly nil-clean ring whose nil-clean elements have exactly one
    /// nil-clean decomposition.
    RingLevel,
    /// Every unit has exactly one weakly nil-clean decomposition.
    ElementLevel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub interpretation: Interpretation,
    pub headline: bool,
    pub ring_level: bool,
    pub element_level: bool,
    /// Ring-level failure: not weakly nil-clean, or a nil-clean element
    /// with several decompositions.
    pub ring_level_witness: Option<ElementId>,
    /// Element-level failure: a unit with zero or several decompositions.
    pub element_level_witness: Option<ElementId>,
    /// Number of weakly nil-clean decompositions of the element-level witness.
    pub element_level_count: Option<usize>,
}

pub fn uniquely_weakly_flag(ring: &Ring, interpretation: Interpretation) -> UniquenessReport {
    let p = profile(ring);
    let ring_level_witness = if !p.flags.weakly_nil_clean {
        p.refutations.get("weakly_nil_clean").map(|v| v[0])
    } else {
        ring.elements()
            .find(|&x| decompositions(ring, x, Mode::NilClean).len() > 1)
    };
    let element_level_hit = ring.units().iter().find_map(|u| {
        let k = decompositions(ring, u, Mode::Weakly).len();
        (k != 1).then_some((u, k))
    });
    let ring_level = ring_level_witness.is_none();
    let element_level = element_level_hit.is_none();
    UniquenessReport {
        interpretation,
        headline: match interpretation {
            Interpretation::RingLevel => ring_level,
            Interpretation::ElementLevel => element_level,
        },
        ring_level,
        element_level,
        ring_level_witness,
        element_level_witness: element_level_hit.map(|h| h.0),
        element_level_count: element_level_hit.map(|h| h.1),
    }
}
