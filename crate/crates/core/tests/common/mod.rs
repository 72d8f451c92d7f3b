//! Brute-force oracles. Everything here is derived from the ring's `add`
//! and `mul` alone, never from the library's classification code.
#![allow(dead_code)]

use finring::harness::Catalog;
use finring::{ElementId, Ring};

pub struct Brute {
    pub n: usize,
    pub zero: usize,
    pub one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    pub neg: Vec<usize>,
    pub unit: Vec<bool>,
    pub nil: Vec<bool>,
    pub idem: Vec<usize>,
    pub jac: Vec<bool>,
}

impl Brute {
    pub fn new(r: &Ring) -> Brute {
        let n = r.order();
        let id = |i: usize| ElementId(i as u32);
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = r.add(id(a), id(b)).index();
                mul[a * n + b] = r.mul(id(a), id(b)).index();
            }
        }
        let zero = r.zero().index();
        let one = r.one().index();
        let neg: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| add[a * n + b] == zero).unwrap())
            .collect();
        let unit: Vec<bool> = (0..n)
            .map(|a| (0..n).any(|b| mul[a * n + b] == one && mul[b * n + a] == one))
            .collect();
        let nil: Vec<bool> = (0..n)
            .map(|a| {
                let mut p = a;
                for _ in 0..n {
                    if p == zero {
                        return true;
                    }
                    p = mul[p * n + a];
                }
                p == zero
            })
            .collect();
        let idem: Vec<usize> = (0..n).filter(|&a| mul[a * n + a] == a).collect();
        let mut b = Brute {
            n,
            zero,
            one,
            add,
            mul,
            neg,
            unit,
            nil,
            idem,
            jac: Vec::new(),
        };
        // x in J iff 1 - yx is a unit for every y
        b.jac = (0..n)
            .map(|x| (0..n).all(|y| b.unit[b.sub(b.one, b.m(y, x))]))
            .collect();
        b
    }

    pub fn a(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y]
    }

    pub fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.a(x, self.neg[y])
    }

    /// Every `(sign, e, nilpotent)` with `x = sign·e + nilpotent`, optionally
    /// requiring `e` and the nilpotent to commute.
    pub fn triples(&self, x: usize, signs: &[i8], strong: bool) -> Vec<(i8, usize, usize)> {
        let mut out = Vec::new();
        for &s in signs {
            for &e in &self.idem {
                for k in 0..self.n {
                    if !self.nil[k] {
                        continue;
                    }
                    let se = if s == 1 { e } else { self.neg[e] };
                    if self.a(se, k) == x && (!strong || self.m(e, k) == self.m(k, e)) {
                        out.push((s, e, k));
                    }
                }
            }
        }
        out
    }

    /// Distinct signed idempotents `sign·e` over the triples.
    pub fn signed_values(&self, x: usize, signs: &[i8], strong: bool) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .triples(x, signs, strong)
            .into_iter()
            .map(|(s, e, _)| if s == 1 { e } else { self.neg[e] })
            .collect();
        v.sort();
        v.dedup();
        v
    }

    fn has(&self, x: usize, signs: &[i8], strong: bool) -> bool {
        signs.iter().any(|&s| {
            self.idem.iter().any(|&e| {
                let se = if s == 1 { e } else { self.neg[e] };
                let k = self.sub(x, se);
                self.nil[k] && (!strong || self.m(e, k) == self.m(k, e))
            })
        })
    }

    pub fn nil_clean(&self, x: usize) -> bool {
        self.has(x, &[1], false)
    }

    pub fn weakly(&self, x: usize) -> bool {
        self.has(x, &[1, -1], false)
    }

    pub fn strongly(&self, x: usize) -> bool {
        self.has(x, &[1], true)
    }

    pub fn strongly_weakly(&self, x: usize) -> bool {
        self.has(x, &[1, -1], true)
    }

    pub fn units(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&u| self.unit[u])
    }

    pub fn flags(&self) -> Flags {
        let all = 0..self.n;
        let m1 = self.neg[self.one];
        let two = self.a(self.one, self.one);
        let non_units: Vec<usize> = (0..self.n).filter(|&x| !self.unit[x]).collect();
        Flags {
            nil_clean: all.clone().all(|x| self.nil_clean(x)),
            weakly_nil_clean: all.clone().all(|x| self.weakly(x)),
            strongly_nil_clean: all.clone().all(|x| self.strongly(x)),
            strongly_weakly_nil_clean: all.clone().all(|x| self.strongly_weakly(x)),
            uu: self.units().all(|u| self.nil[self.sub(u, self.one)]),
            wuu: self
                .units()
                .all(|u| self.nil[self.sub(u, self.one)] || self.nil[self.sub(u, m1)]),
            unc: self.units().all(|u| self.nil_clean(u)),
            uwnc: self.units().all(|u| self.weakly(u)),
            clean: all
                .clone()
                .all(|x| self.idem.iter().any(|&e| self.unit[self.sub(x, e)])),
            local: non_units
                .iter()
                .all(|&a| non_units.iter().all(|&b| !self.unit[self.a(a, b)])),
            abelian: self
                .idem
                .iter()
                .all(|&e| all.clone().all(|y| self.m(e, y) == self.m(y, e))),
            reduced: all.clone().all(|x| x == self.zero || !self.nil[x]),
            two_primal: all.clone().all(|x| self.nil[x] == self.jac[x]),
            semipotent: all.clone().filter(|&x| !self.jac[x]).all(|x| {
                (0..self.n)
                    .map(|y| self.m(x, y))
                    .any(|e| e != self.zero && self.m(e, e) == e)
            }),
            two_in_j: self.jac[two],
            two_in_u: self.unit[two],
        }
    }

    /// Every unit has exactly one signed idempotent `±e` with `u ∓ e` nilpotent.
    pub fn units_uniquely_weakly(&self) -> bool {
        self.units().all(|u| self.signed_values(u, &[1, -1], false).len() == 1)
    }

    /// Weakly nil-clean, and each nil-clean element has one idempotent `e`
    /// with `x - e` nilpotent.
    pub fn uniquely_weakly_ring(&self) -> bool {
        (0..self.n).all(|x| self.weakly(x))
            && (0..self.n).all(|x| self.idem.iter().filter(|&&e| self.nil[self.sub(x, e)]).count() <= 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
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
    pub two_in_j: bool,
    pub two_in_u: bool,
}

impl Flags {
    pub fn get(&self, name: &str) -> bool {
        match name {
            "nil_clean" => self.nil_clean,
            "weakly_nil_clean" => self.weakly_nil_clean,
            "strongly_nil_clean" => self.strongly_nil_clean,
            "strongly_weakly_nil_clean" => self.strongly_weakly_nil_clean,
            "uu" => self.uu,
            "wuu" => self.wuu,
            "unc" => self.unc,
            "uwnc" => self.uwnc,
            "clean" => self.clean,
            "local" => self.local,
            "abelian" => self.abelian,
            "reduced" => self.reduced,
            "two_primal" => self.two_primal,
            "semipotent" => self.semipotent,
            "two_in_j" => self.two_in_j,
            "two_in_u" => self.two_in_u,
            other => panic!("no brute flag {other}"),
        }
    }
}

/// Catalog rings within the default budget, with their spec text.
pub fn catalog_rings() -> Vec<(String, Ring)> {
    let catalog = Catalog::default_catalog();
    let limits = catalog.limits();
    catalog
        .specs
        .iter()
        .filter(|s| s.order_bound() <= catalog.budget as u128)
        .map(|s| (s.to_string(), s.build(&limits).unwrap()))
        .collect()
}
