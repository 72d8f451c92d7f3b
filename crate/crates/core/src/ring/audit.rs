use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{ElementId, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub elements: Vec<ElementId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub exhaustive: bool,
    pub triples_checked: u64,
    pub violation: Option<AxiomViolation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

const AUDIT_SEED: u64 = 0x0005_eed0_fa11;

impl Ring {
    /// Ring-axiom audit: exhaustive up to `limits.exhaustive_audit_limit`,
    /// otherwise `limits.audit_samples` random triples from a fixed seed.
    pub fn audit(&self) -> AuditReport {
        let exhaustive = self.order() <= self.limits().exhaustive_audit_limit;
        let violation = self.audit_single().or_else(|| self.audit_pairs()).or_else(|| {
            if exhaustive {
                self.audit_triples_exhaustive()
            } else {
                self.audit_triples_sampled(self.limits().audit_samples)
            }
        });
        let n = self.order() as u64;
        AuditReport {
            exhaustive,
            triples_checked: if exhaustive {
                n * n * n
            } else {
                self.limits().audit_samples as u64
            },
            violation,
        }
    }

    fn audit_single(&self) -> Option<AxiomViolation> {
        let (zero, one) = (self.zero(), self.one());
        self.elements().find_map(|a| {
            let law = if self.add(a, zero) != a || self.add(zero, a) != a {
                "additive identity"
            } else if self.add(a, self.neg(a)) != zero {
                "additive inverse"
            } else if self.mul(a, one) != a || self.mul(one, a) != a {
                "multiplicative identity"
            } else {
                return None;
            };
            Some(AxiomViolation { law, elements: vec![a] })
        })
    }

    fn audit_pairs(&self) -> Option<AxiomViolation> {
        let check = |a: ElementId, b: ElementId| {
            (self.add(a, b) != self.add(b, a)).then(|| AxiomViolation {
                law: "additive commutativity",
                elements: vec![a, b],
            })
        };
        if self.order() <= self.limits().table_limit {
            self.elements()
                .collect::<Vec<_>>()
                .into_par_iter()
                .find_map_first(|a| self.elements().find_map(|b| check(a, b)))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(AUDIT_SEED);
            let n = self.order() as u32;
            (0..self.limits().audit_samples)
                .find_map(|_| check(ElementId(rng.random_range(0..n)), ElementId(rng.random_range(0..n))))
        }
    }

    fn triple_violation(&self, a: ElementId, b: ElementId, c: ElementId) -> Option<AxiomViolation> {
        let law = if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
            "additive associativity"
        } else if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
            "multiplicative associativity"
        } else if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
            "left distributivity"
        } else if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
            "right distributivity"
        } else {
            return None;
        };
        Some(AxiomViolation {
            law,
            elements: vec![a, b, c],
        })
    }

    fn audit_triples_exhaustive(&self) -> Option<AxiomViolation> {
        self.elements().collect::<Vec<_>>().into_par_iter().find_map_first(|a| {
            self.elements()
                .find_map(|b| self.elements().find_map(|c| self.triple_violation(a, b, c)))
        })
    }

    fn audit_triples_sampled(&self, samples: usize) -> Option<AxiomViolation> {
        let mut rng = ChaCha8Rng::seed_from_u64(AUDIT_SEED);
        let n = self.order() as u32;
        (0..samples).find_map(|_| {
            let a = ElementId(rng.random_range(0..n));
            let b = ElementId(rng.random_range(0..n));
            let c = ElementId(rng.random_range(0..n));
            self.triple_violation(a, b, c)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Limits;

    #[test]
    fn corrupted_table_is_caught() {
        // Z_3 with one multiplication entry broken: 2*2 = 2 instead of 1.
        let add = vec![0, 1, 2, 1, 2, 0, 2, 0, 1];
        let mul = vec![0, 0, 0, 0, 1, 2, 0, 2, 2];
        let r = Ring::from_tables("bad", 3, add, mul, 0, 1, Limits::default()).unwrap();
        let report = r.audit();
        assert!(report.exhaustive);
        assert!(!report.passed());
    }

    #[test]
    fn sampled_audit_above_limit() {
        let limits = Limits {
            exhaustive_audit_limit: 4,
            audit_samples: 1000,
            ..Limits::default()
        };
        let r = crate::construct::zn(7, &limits).unwrap();
        let report = r.audit();
        assert!(!report.exhaustive);
        assert_eq!(report.triples_checked, 1000);
        assert!(report.passed());
    }
}
