//! Exhaustive structure algorithms: special subsets, the Jacobson radical,
//! ideals, quotients and generated subrings.

use std::collections::VecDeque;
use std::sync::Arc;

use rayon::prelude::*;

use super::{Arithmetic, ElementId, ElementSubset, IdealHandle, Ring, SubsetKind};
use crate::{Result, RingError};

impl Ring {
    fn inverse_table(&self) -> &[Option<ElementId>] {
        self.0.cache.inverses.get_or_init(|| {
            let one = self.one();
            self.elements()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|x| {
                    let mut found = None;
                    for y in self.elements() {
                        if self.mul(x, y) == one && self.mul(y, x) == one {
                            assert!(
                                found.is_none(),
                                "{}: two-sided inverse of {x} is not unique",
                                self.label()
                            );
                            found = Some(y);
                        }
                    }
                    found
                })
                .collect()
        })
    }

    /// Two-sided inverse, if `x` is a unit.
    pub fn inverse(&self, x: ElementId) -> Option<ElementId> {
        self.inverse_table().get(x.index()).copied().flatten()
    }

    pub fn is_unit(&self, x: ElementId) -> bool {
        self.units().contains(x)
    }

    /// U(R).
    pub fn units(&self) -> &ElementSubset {
        self.0.cache.units.get_or_init(|| {
            let inv = self.inverse_table();
            ElementSubset::from_predicate(SubsetKind::Units, self.order(), |x| inv[x.index()].is_some())
        })
    }

    /// Id(R).
    pub fn idempotents(&self) -> &ElementSubset {
        self.0.cache.idempotents.get_or_init(|| {
            ElementSubset::from_predicate(SubsetKind::Idempotents, self.order(), |x| self.mul(x, x) == x)
        })
    }

    fn nilpotency_table(&self) -> &[Option<u32>] {
        self.0.cache.nilpotency.get_or_init(|| {
            let zero = self.zero();
            let cap = self.order() as u32;
            self.elements()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|x| {
                    let mut p = x;
                    let mut k = 1u32;
                    while p != zero && k < cap {
                        p = self.mul(p, x);
                        k += 1;
                    }
                    (p == zero).then_some(k)
                })
                .collect()
        })
    }

    /// Least `k >= 1` with `x^k = 0`. Powers cycle within `order` steps, so
    /// `None` proves `x` is not nilpotent.
    pub fn nilpotency_index(&self, x: ElementId) -> Option<u32> {
        self.nilpotency_table().get(x.index()).copied().flatten()
    }

    pub fn is_nilpotent(&self, x: ElementId) -> bool {
        self.nilpotents().contains(x)
    }

    /// Nil(R).
    pub fn nilpotents(&self) -> &ElementSubset {
        self.0.cache.nilpotents.get_or_init(|| {
            let t = self.nilpotency_table();
            ElementSubset::from_predicate(SubsetKind::Nilpotents, self.order(), |x| t[x.index()].is_some())
        })
    }

    /// Z(R).
    pub fn center(&self) -> &ElementSubset {
        self.0.cache.center.get_or_init(|| {
            let flags: Vec<bool> = self
                .elements()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|x| self.elements().all(|r| self.commutes(x, r)))
                .collect();
            ElementSubset::from_predicate(SubsetKind::Center, self.order(), |x| flags[x.index()])
        })
    }

    pub fn is_central(&self, x: ElementId) -> bool {
        self.center().contains(x)
    }

    /// Looks up a structural subset by kind. `Custom` has no canonical set.
    pub fn special_subset(&self, kind: SubsetKind) -> Option<&ElementSubset> {
        match kind {
            SubsetKind::Units => Some(self.units()),
            SubsetKind::Idempotents => Some(self.idempotents()),
            SubsetKind::Nilpotents => Some(self.nilpotents()),
            SubsetKind::Center => Some(self.center()),
            SubsetKind::Radical => Some(self.jacobson_radical().members()),
            SubsetKind::Custom => None,
        }
    }

    /// J(R) = { x : 1 - r x is a unit for every r }.
    ///
    /// Panics if the result is not a nilpotent two-sided ideal, which can only
    /// happen for tables that violate the ring axioms.
    pub fn jacobson_radical(&self) -> &IdealHandle {
        self.0.cache.radical.get_or_init(|| {
            let units = self.units();
            let one = self.one();
            let flags: Vec<bool> = self
                .elements()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|x| self.elements().all(|r| units.contains(self.sub(one, self.mul(r, x)))))
                .collect();
            let members = ElementSubset::from_predicate(SubsetKind::Radical, self.order(), |x| flags[x.index()]);
            if let Err(reason) = self.check_two_sided(&members) {
                panic!("{}: J(R) is not a two-sided ideal: {reason}", self.label());
            }
            let ideal = IdealHandle {
                members,
                two_sided: true,
            };
            assert!(
                self.ideal_nilpotency_degree(&ideal).is_some(),
                "{}: J(R) is not nilpotent",
                self.label()
            );
            ideal
        })
    }

    /// Least `k` with `I^k = 0`, where `I^k` is the additive span of
    /// products; `None` if the powers stabilize at a nonzero ideal.
    pub fn ideal_nilpotency_degree(&self, ideal: &IdealHandle) -> Option<u32> {
        let base: Vec<ElementId> = ideal.iter().collect();
        let mut power = ideal.members().clone();
        let mut k = 1u32;
        loop {
            if power.len() <= 1 {
                return Some(k);
            }
            if k as usize >= self.order() {
                return None;
            }
            let products: Vec<ElementId> = power
                .iter()
                .flat_map(|a| base.iter().map(move |&b| (a, b)))
                .map(|(a, b)| self.mul(a, b))
                .collect();
            let next = self.additive_span(products);
            if next.same_members(&power) {
                return None;
            }
            power = next;
            k += 1;
        }
    }

    /// Strongly nilpotent elements: every sequence `x_0 = x`,
    /// `x_{k+1} in x_k R x_k` reaches zero. Computed as the least fixed point
    /// of "all successors are already known to die out", which excludes
    /// exactly the elements that can reach a nonzero cycle.
    pub fn lower_nilradical_oracle(&self) -> Result<ElementSubset> {
        let cap = self.limits().oracle_cap;
        if self.order() > cap {
            return Err(RingError::OracleCap {
                order: self.order(),
                cap,
            });
        }
        let n = self.order();
        let successors: Vec<Vec<ElementId>> = self
            .elements()
            .map(|x| {
                let mut seen = ElementSubset::empty(SubsetKind::Custom, n);
                for r in self.elements() {
                    seen.insert(self.mul(self.mul(x, r), x));
                }
                seen.iter().collect()
            })
            .collect();
        let mut good = ElementSubset::empty(SubsetKind::Radical, n);
        good.insert(self.zero());
        loop {
            let mut changed = false;
            for x in self.elements() {
                if !good.contains(x) && successors[x.index()].iter().all(|&y| good.contains(y)) {
                    good.insert(x);
                    changed = true;
                }
            }
            if !changed {
                return Ok(good);
            }
        }
    }

    /// Adds `x` to an additive subgroup given by `span` and its member list.
    fn extend_span(&self, span: &mut ElementSubset, members: &mut Vec<ElementId>, x: ElementId) -> bool {
        if span.contains(x) {
            return false;
        }
        let base = members.clone();
        let mut step = x;
        while !span.contains(step) {
            for &h in &base {
                let y = self.add(h, step);
                if span.insert(y) {
                    members.push(y);
                }
            }
            step = self.add(step, x);
        }
        true
    }

    /// Additive subgroup generated by `gens`.
    pub fn additive_span(&self, gens: impl IntoIterator<Item = ElementId>) -> ElementSubset {
        let mut span = ElementSubset::empty(SubsetKind::Custom, self.order());
        span.insert(self.zero());
        let mut members = vec![self.zero()];
        for g in gens {
            self.extend_span(&mut span, &mut members, g);
        }
        span
    }

    /// Least two-sided ideal containing `gens`.
    pub fn ideal_generated(&self, gens: &[ElementId]) -> Result<IdealHandle> {
        for &g in gens {
            self.check_element(g)?;
        }
        let mut span = ElementSubset::empty(SubsetKind::Custom, self.order());
        span.insert(self.zero());
        let mut members = vec![self.zero()];
        let mut queue: VecDeque<ElementId> = gens.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            if self.extend_span(&mut span, &mut members, x) {
                for r in self.elements() {
                    queue.push_back(self.mul(r, x));
                    queue.push_back(self.mul(x, r));
                }
            }
        }
        self.ideal_from_subset(span)
    }

    /// Validates `members` as a two-sided ideal.
    pub fn ideal_from_subset(&self, members: ElementSubset) -> Result<IdealHandle> {
        self.check_two_sided(&members).map_err(|reason| RingError::NotIdeal {
            ring: self.label().to_string(),
            reason,
        })?;
        Ok(IdealHandle {
            members,
            two_sided: true,
        })
    }

    /// Wraps a set without verification; [`Ring::quotient`] rejects it unless
    /// it later proves two-sided.
    pub fn unverified_ideal(&self, members: ElementSubset) -> IdealHandle {
        IdealHandle {
            members,
            two_sided: false,
        }
    }

    fn check_two_sided(&self, set: &ElementSubset) -> std::result::Result<(), String> {
        if set.universe() != self.order() {
            return Err("subset belongs to a different ring".into());
        }
        if !set.contains(self.zero()) {
            return Err("does not contain 0".into());
        }
        let members: Vec<ElementId> = set.iter().collect();
        for &a in &members {
            if !set.contains(self.neg(a)) {
                return Err(format!("not closed under negation at {a}"));
            }
            for &b in &members {
                if !set.contains(self.add(a, b)) {
                    return Err(format!("not closed under addition at ({a}, {b})"));
                }
            }
            for r in self.elements() {
                if !set.contains(self.mul(r, a)) {
                    return Err(format!("left product {r}*{a} escapes"));
                }
                if !set.contains(self.mul(a, r)) {
                    return Err(format!("right product {a}*{r} escapes"));
                }
            }
        }
        Ok(())
    }

    /// R / I with the least element id of each coset as its representative.
    pub fn quotient(&self, ideal: &IdealHandle) -> Result<Ring> {
        self.quotient_labeled(ideal, format!("{}/I", self.label()))
    }

    pub fn quotient_labeled(&self, ideal: &IdealHandle, label: impl Into<String>) -> Result<Ring> {
        let not_ideal = |reason: String| RingError::NotIdeal {
            ring: self.label().to_string(),
            reason,
        };
        if !ideal.is_two_sided() {
            return Err(not_ideal("ideal handle is not verified two-sided".into()));
        }
        if ideal.members().universe() != self.order() {
            return Err(not_ideal("ideal belongs to a different ring".into()));
        }
        let members: Vec<ElementId> = ideal.iter().collect();
        let mut coset = vec![u32::MAX; self.order()];
        let mut reps = Vec::new();
        for a in self.elements() {
            if coset[a.index()] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(a);
            for &i in &members {
                coset[self.add(a, i).index()] = idx;
            }
        }
        let arith = QuotientArithmetic {
            parent: self.clone(),
            coset,
            reps,
        };
        let order = arith.reps.len();
        let zero = ElementId(arith.coset[self.zero().index()]);
        let one = ElementId(arith.coset[self.one().index()]);
        let q = Ring::assemble(
            label.into(),
            order,
            zero,
            one,
            Arc::new(arith),
            Vec::new(),
            *self.limits(),
        )?;
        q.require_axioms()?;
        Ok(q)
    }

    /// R / J(R).
    pub fn radical_quotient(&self) -> Result<Ring> {
        self.quotient_labeled(self.jacobson_radical(), format!("{}/J", self.label()))
    }

    /// Closure of `{0, 1} ∪ gens` under `+`, `-` and `·`, as sorted parent ids.
    fn subring_closure(&self, gens: &[ElementId]) -> Vec<ElementId> {
        let mut span = ElementSubset::empty(SubsetKind::Custom, self.order());
        span.insert(self.zero());
        let mut members = vec![self.zero()];
        let mut generators: Vec<ElementId> = Vec::new();
        let mut queue: VecDeque<ElementId> = std::iter::once(self.one()).chain(gens.iter().copied()).collect();
        while let Some(x) = queue.pop_front() {
            if self.extend_span(&mut span, &mut members, x) {
                generators.push(x);
                for &g in &generators {
                    queue.push_back(self.mul(x, g));
                    queue.push_back(self.mul(g, x));
                }
            }
        }
        span.iter().collect()
    }

    /// Unital subring generated by `gens`, labeled in ring-spec syntax.
    pub fn subring_generated(&self, gens: &[ElementId]) -> Result<Ring> {
        for &g in gens {
            self.check_element(g)?;
        }
        let label = if gens.is_empty() {
            format!("sub({})", self.label())
        } else {
            let parts: Vec<String> = gens
                .iter()
                .map(|&g| self.describe(g).chars().filter(|c| !c.is_whitespace()).collect())
                .collect();
            format!("sub({};{})", self.label(), parts.join(","))
        };
        self.subring_from_members(self.subring_closure(gens), label)
    }

    /// Z(R) packaged as a ring.
    pub fn center_ring(&self) -> Result<Ring> {
        let gens: Vec<ElementId> = self.center().iter().collect();
        self.subring_from_members(self.subring_closure(&gens), format!("Z({})", self.label()))
    }

    pub(crate) fn subring_from_members(&self, members: Vec<ElementId>, label: String) -> Result<Ring> {
        let mut position = vec![u32::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            position[m.index()] = i as u32;
        }
        let zero = ElementId(position[self.zero().index()]);
        let one = ElementId(position[self.one().index()]);
        let order = members.len();
        let arith = SubsetArithmetic {
            parent: self.clone(),
            members,
            position,
        };
        Ring::assemble(label, order, zero, one, Arc::new(arith), Vec::new(), *self.limits())
    }

    pub(crate) fn require_axioms(&self) -> Result<()> {
        match self.audit().violation {
            None => Ok(()),
            Some(v) => Err(RingError::AxiomViolation {
                ring: self.label().to_string(),
                law: v.law,
                elements: format!("{:?}", v.elements.iter().map(|e| e.0).collect::<Vec<_>>()),
            }),
        }
    }
}

struct QuotientArithmetic {
    parent: Ring,
    coset: Vec<u32>,
    reps: Vec<ElementId>,
}

impl QuotientArithmetic {
    fn lift(&self, a: ElementId) -> ElementId {
        self.reps[a.index()]
    }
    fn project(&self, x: ElementId) -> ElementId {
        ElementId(self.coset[x.index()])
    }
}

impl Arithmetic for QuotientArithmetic {
    fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.project(self.parent.add(self.lift(a), self.lift(b)))
    }
    fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.project(self.parent.mul(self.lift(a), self.lift(b)))
    }
    fn neg(&self, a: ElementId) -> ElementId {
        self.project(self.parent.neg(self.lift(a)))
    }
    fn describe(&self, a: ElementId) -> String {
        format!("[{}]", self.parent.describe(self.lift(a)))
    }
}

struct SubsetArithmetic {
    parent: Ring,
    members: Vec<ElementId>,
    position: Vec<u32>,
}

impl SubsetArithmetic {
    fn local(&self, x: ElementId) -> ElementId {
        let p = self.position[x.index()];
        debug_assert!(p != u32::MAX, "operation left the subring");
        ElementId(p)
    }
}

impl Arithmetic for SubsetArithmetic {
    fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.local(self.parent.add(self.members[a.index()], self.members[b.index()]))
    }
    fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.local(self.parent.mul(self.members[a.index()], self.members[b.index()]))
    }
    fn neg(&self, a: ElementId) -> ElementId {
        self.local(self.parent.neg(self.members[a.index()]))
    }
    fn describe(&self, a: ElementId) -> String {
        self.parent.describe(self.members[a.index()])
    }
}
