use serde::Serialize;

use crate::ring::{IdealHandle, RingMap};
use crate::{Result, Ring, RingError};

/// A finite group given by its Cayley table. Element `0..order`; the
/// identity id is stored explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    identity: u32,
    table: Vec<u32>,
}

impl FiniteGroup {
    /// Verifies closure, associativity, identity and inverses exhaustively.
    pub fn from_table(label: impl Into<String>, order: usize, table: Vec<u32>, identity: u32) -> Result<Self> {
        let label = label.into();
        let bad = |why: &str| Err(RingError::InvalidGroup(format!("{label}: {why}")));
        if order == 0 || table.len() != order * order || identity as usize >= order {
            return bad("table shape");
        }
        if table.iter().any(|&x| x as usize >= order) {
            return bad("table entry out of range");
        }
        let op = |a: usize, b: usize| table[a * order + b] as usize;
        let e = identity as usize;
        if (0..order).any(|a| op(a, e) != a || op(e, a) != a) {
            return bad("identity law fails");
        }
        if (0..order).any(|a| !(0..order).any(|b| op(a, b) == e && op(b, a) == e)) {
            return bad("an element has no inverse");
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return bad("associativity fails");
                    }
                }
            }
        }
        Ok(FiniteGroup {
            label,
            order,
            identity,
            table,
        })
    }

    /// `C_{n1} x C_{n2} x ...`, elements in mixed radix with the first
    /// factor most significant.
    pub fn cyclic_product(orders: &[u32]) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(RingError::InvalidGroup("cyclic factor orders must be positive".into()));
        }
        let order: usize = orders
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n as usize))
            .filter(|&n| n <= 1 << 16)
            .ok_or_else(|| RingError::InvalidGroup("group too large".into()))?;
        let digits = |mut g: usize| {
            let mut d = vec![0u32; orders.len()];
            for (i, &n) in orders.iter().enumerate().rev() {
                d[i] = (g % n as usize) as u32;
                g /= n as usize;
            }
            d
        };
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            let da = digits(a);
            for b in 0..order {
                let db = digits(b);
                let id = orders
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (i, &n)| acc * n + (da[i] + db[i]) % n);
                table[a * order + b] = id;
            }
        }
        let label = orders.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("x");
        Self::from_table(label, order, table, 0)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn op(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn element_order(&self, g: u32) -> u32 {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.op(x, g);
            k += 1;
        }
        k
    }

    /// Every element order is a power of `p`.
    pub fn is_p_group(&self, p: u32) -> bool {
        (0..self.order as u32).all(|g| {
            let mut k = self.element_order(g);
            while k.is_multiple_of(p) {
                k /= p;
            }
            k == 1
        })
    }

    /// The prime `p` for which this is a nontrivial p-group.
    pub fn p_group_prime(&self) -> Option<u32> {
        let n = self.order as u32;
        let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
        self.is_p_group(p).then_some(p)
    }
}

/// `RG` together with its augmentation `ε: RG -> R`, the inclusion
/// `i: R -> RG` and the augmentation ideal `Δ(G) = ker ε`.
#[derive(Debug, Clone)]
pub struct GroupRing {
    pub ring: Ring,
    pub base: Ring,
    pub group: FiniteGroup,
    pub augmentation: RingMap,
    pub inclusion: RingMap,
    pub augmentation_ideal: IdealHandle,
}
