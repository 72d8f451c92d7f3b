use serde::Serialize;

use super::{ElementId, ElementSubset, Ring, SubsetKind};
use crate::{Result, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapViolation {
    pub law: &'static str,
    pub elements: Vec<ElementId>,
}

/// Flags of a map, each established by exhaustive verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub additive: bool,
    pub multiplicative: bool,
    pub unital: bool,
    /// First failing input for every violated law.
    pub failures: Vec<MapViolation>,
}

impl MapReport {
    pub fn is_homomorphism(&self) -> bool {
        self.additive && self.multiplicative && self.unital
    }
}

/// A total function between the element sets of two rings.
#[derive(Debug, Clone)]
pub struct RingMap {
    domain: Ring,
    codomain: Ring,
    image: Vec<ElementId>,
    report: MapReport,
}

impl RingMap {
    pub fn new(domain: &Ring, codomain: &Ring, image: Vec<ElementId>) -> Result<RingMap> {
        if image.len() != domain.order() {
            return Err(RingError::InvalidMap(format!(
                "map has {} images for a domain of order {}",
                image.len(),
                domain.order()
            )));
        }
        if let Some(bad) = image.iter().find(|y| !codomain.contains(**y)) {
            return Err(RingError::InvalidMap(format!(
                "image {bad} is outside {}",
                codomain.label()
            )));
        }
        let report = verify(domain, codomain, &image);
        Ok(RingMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            image,
            report,
        })
    }

    pub fn from_fn(domain: &Ring, codomain: &Ring, f: impl Fn(ElementId) -> ElementId) -> Result<RingMap> {
        Self::new(domain, codomain, domain.elements().map(f).collect())
    }

    pub fn identity(ring: &Ring) -> RingMap {
        Self::new(ring, ring, ring.elements().collect()).expect("identity map is total")
    }

    pub fn domain(&self) -> &Ring {
        &self.domain
    }

    pub fn codomain(&self) -> &Ring {
        &self.codomain
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.image[x.index()]
    }

    pub fn images(&self) -> &[ElementId] {
        &self.image
    }

    pub fn report(&self) -> &MapReport {
        &self.report
    }

    pub fn kernel(&self) -> ElementSubset {
        let zero = self.codomain.zero();
        ElementSubset::from_predicate(SubsetKind::Custom, self.domain.order(), |x| self.apply(x) == zero)
    }

    pub fn image_of(&self, set: &ElementSubset) -> ElementSubset {
        ElementSubset::from_ids(
            SubsetKind::Custom,
            self.codomain.order(),
            set.iter().map(|x| self.apply(x)),
        )
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &RingMap) -> Result<RingMap> {
        if !inner.codomain.same(&self.domain) && inner.codomain.label() != self.domain.label() {
            return Err(RingError::InvalidMap("maps do not compose".into()));
        }
        Self::new(
            &inner.domain,
            &self.codomain,
            inner.image.iter().map(|&y| self.apply(y)).collect(),
        )
    }
}

fn verify(domain: &Ring, codomain: &Ring, image: &[ElementId]) -> MapReport {
    let f = |x: ElementId| image[x.index()];
    let mut failures = Vec::new();
    let find_pair = |law: &'static str, ok: &dyn Fn(ElementId, ElementId) -> bool| {
        domain.elements().find_map(|a| {
            domain.elements().find_map(|b| {
                (!ok(a, b)).then(|| MapViolation {
                    law,
                    elements: vec![a, b],
                })
            })
        })
    };
    let additive = find_pair("additive", &|a, b| f(domain.add(a, b)) == codomain.add(f(a), f(b)));
    let multiplicative = find_pair("multiplicative", &|a, b| {
        f(domain.mul(a, b)) == codomain.mul(f(a), f(b))
    });
    let unital = f(domain.one()) == codomain.one();
    let report_additive = additive.is_none();
    let report_multiplicative = multiplicative.is_none();
    failures.extend(additive);
    failures.extend(multiplicative);
    if !unital {
        failures.push(MapViolation {
            law: "unital",
            elements: vec![domain.one()],
        });
    }
    MapReport {
        additive: report_additive,
        multiplicative: report_multiplicative,
        unital,
        failures,
    }
}

/// Outcome of checking a retraction pair `i: R -> S`, `ε: S -> R` with
/// `ε ∘ i = id_R`, together with the image equalities
/// `ε(Nil S) = Nil R`, `ε(U S) = U R`, `ε(Id S) = Id R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RetractionReport {
    pub inclusion: MapReport,
    pub projection: MapReport,
    pub composite_is_identity: bool,
    pub nil_image: bool,
    pub unit_image: bool,
    pub idempotent_image: bool,
    pub failure: Option<String>,
}

impl RetractionReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl RingMap {
    /// Treats `self` as `ε: S -> R` and `inclusion` as `i: R -> S`.
    pub fn verify_retraction(&self, inclusion: &RingMap) -> RetractionReport {
        let base = &self.codomain;
        let composite_is_identity =
            inclusion.domain.order() == base.order() && base.elements().all(|x| self.apply(inclusion.apply(x)) == x);
        let nil_image = self.image_of(self.domain.nilpotents()).same_members(base.nilpotents());
        let unit_image = self.image_of(self.domain.units()).same_members(base.units());
        let idempotent_image = self
            .image_of(self.domain.idempotents())
            .same_members(base.idempotents());
        let failure = if !inclusion.report.is_homomorphism() {
            Some(format!(
                "inclusion is not a unital homomorphism: {:?}",
                inclusion.report.failures
            ))
        } else if !self.report.is_homomorphism() {
            Some(format!(
                "projection is not a unital homomorphism: {:?}",
                self.report.failures
            ))
        } else if !composite_is_identity {
            Some("projection after inclusion is not the identity".into())
        } else if !nil_image {
            Some("image of Nil(S) differs from Nil(R)".into())
        } else if !unit_image {
            Some("image of U(S) differs from U(R)".into())
        } else if !idempotent_image {
            Some("image of Id(S) differs from Id(R)".into())
        } else {
            None
        };
        RetractionReport {
            inclusion: inclusion.report.clone(),
            projection: self.report.clone(),
            composite_is_identity,
            nil_image,
            unit_image,
            idempotent_image,
            failure,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::Limits;

    #[test]
    fn identity_map_is_homomorphism() {
        let r = construct::zn(6, &Limits::default()).unwrap();
        assert!(RingMap::identity(&r).report().is_homomorphism());
    }

    #[test]
    fn tripling_on_z4_is_additive_only() {
        let r = construct::zn(4, &Limits::default()).unwrap();
        let m = RingMap::from_fn(&r, &r, |x| r.int_multiple(x, 3)).unwrap();
        let rep = m.report();
        assert!(rep.additive);
        assert!(!rep.multiplicative);
        assert!(!rep.unital);
        assert_eq!(rep.failures[0].law, "multiplicative");
    }

    #[test]
    fn rejects_partial_maps() {
        let r = construct::zn(4, &Limits::default()).unwrap();
        assert!(RingMap::new(&r, &r, vec![ElementId(0)]).is_err());
        assert!(RingMap::new(&r, &r, vec![ElementId(9); 4]).is_err());
    }
}
