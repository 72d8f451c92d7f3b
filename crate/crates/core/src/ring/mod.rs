//! The uniform finite-ring interface.
//!
//! A [`Ring`] is an immutable, cheaply clonable handle. Elements are
//! [`ElementId`]s in `0..order`; the id of zero and one are fixed per ring.
//! Small rings carry full addition/multiplication tables, larger ones compute
//! through their [`Arithmetic`] backend. Structural sets (units, idempotents,
//! nilpotents, center, radical) are filled lazily and exactly once.

mod audit;
mod map;
mod structure;
mod subset;
pub(crate) mod tuple;

pub use audit::{AuditReport, AxiomViolation};
pub use map::{MapReport, MapViolation, RetractionReport, RingMap};
pub use subset::{ElementSubset, IdealHandle, SubsetKind};

use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Result, RingError};

/// Index of an element in its ring's canonical enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Size caps. All of them are configuration; [`Limits::default`] holds the
/// stock values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Constructors reject rings with more elements than this.
    pub order_cap: usize,
    /// Rings up to this order get materialized operation tables.
    pub table_limit: usize,
    /// Largest order the strongly-nilpotent search will run on.
    pub oracle_cap: usize,
    /// Rings up to this order get an exhaustive axiom audit.
    pub exhaustive_audit_limit: usize,
    /// Random triples checked by the audit above the exhaustive limit.
    pub audit_samples: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: 1 << 16,
            table_limit: 4096,
            oracle_cap: 64,
            exhaustive_audit_limit: 256,
            audit_samples: 100_000,
        }
    }
}

/// Raw arithmetic of a ring on element ids.
///
/// Implementations must be total on `0..order`.
pub trait Arithmetic: Send + Sync {
    fn add(&self, a: ElementId, b: ElementId) -> ElementId;
    fn mul(&self, a: ElementId, b: ElementId) -> ElementId;
    fn neg(&self, a: ElementId) -> ElementId;
    fn describe(&self, a: ElementId) -> String {
        a.to_string()
    }
}

/// Arithmetic given directly by Cayley tables (row = left operand).
pub struct TableArithmetic {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl TableArithmetic {
    pub fn new(order: usize, add: Vec<u32>, mul: Vec<u32>, zero: u32) -> Result<Self> {
        if add.len() != order * order || mul.len() != order * order {
            return Err(RingError::InvalidSize(format!(
                "tables must have {} entries",
                order * order
            )));
        }
        if add.iter().chain(mul.iter()).any(|&x| x as usize >= order) {
            return Err(RingError::InvalidSize("table entry out of range".into()));
        }
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] == zero)
                    .map(|b| b as u32)
                    .unwrap_or(zero)
            })
            .collect();
        Ok(TableArithmetic { order, add, mul, neg })
    }
}

impl Arithmetic for TableArithmetic {
    fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.add[a.index() * self.order + b.index()])
    }
    fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.mul[a.index() * self.order + b.index()])
    }
    fn neg(&self, a: ElementId) -> ElementId {
        ElementId(self.neg[a.index()])
    }
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

#[derive(Default)]
struct Cache {
    inverses: OnceLock<Vec<Option<ElementId>>>,
    units: OnceLock<ElementSubset>,
    idempotents: OnceLock<ElementSubset>,
    nilpotency: OnceLock<Vec<Option<u32>>>,
    nilpotents: OnceLock<ElementSubset>,
    center: OnceLock<ElementSubset>,
    radical: OnceLock<IdealHandle>,
    profile: OnceLock<crate::classify::RingProfile>,
}

struct Inner {
    label: String,
    order: usize,
    zero: ElementId,
    one: ElementId,
    arith: Arc<dyn Arithmetic>,
    tables: Option<Tables>,
    factors: Vec<Ring>,
    limits: Limits,
    cache: Cache,
}

/// A finite unital ring with `1 != 0`.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("label", &self.0.label)
            .field("order", &self.0.order)
            .finish()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label)
    }
}

impl Ring {
    /// Wraps an arithmetic backend. Tables are materialized when the order
    /// is within `limits.table_limit`.
    pub fn from_arithmetic(
        label: impl Into<String>,
        order: usize,
        zero: ElementId,
        one: ElementId,
        arith: Arc<dyn Arithmetic>,
        limits: Limits,
    ) -> Result<Ring> {
        Self::assemble(label.into(), order, zero, one, arith, Vec::new(), limits)
    }

    /// Builds a ring from explicit Cayley tables. No axioms are checked here;
    /// use [`Ring::audit`].
    pub fn from_tables(
        label: impl Into<String>,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: u32,
        one: u32,
        limits: Limits,
    ) -> Result<Ring> {
        let arith = TableArithmetic::new(order, add, mul, zero)?;
        Self::from_arithmetic(label, order, ElementId(zero), ElementId(one), Arc::new(arith), limits)
    }

    pub(crate) fn assemble(
        label: String,
        order: usize,
        zero: ElementId,
        one: ElementId,
        arith: Arc<dyn Arithmetic>,
        factors: Vec<Ring>,
        limits: Limits,
    ) -> Result<Ring> {
        if order < 2 || zero == one {
            return Err(RingError::Trivial);
        }
        if order > limits.order_cap {
            return Err(RingError::OrderCap {
                order: order as u128,
                cap: limits.order_cap,
            });
        }
        let tables = (order <= limits.table_limit && order <= 1 << 16).then(|| build_tables(order, arith.as_ref()));
        Ok(Ring(Arc::new(Inner {
            label,
            order,
            zero,
            one,
            arith,
            tables,
            factors,
            limits,
            cache: Cache::default(),
        })))
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn zero(&self) -> ElementId {
        self.0.zero
    }

    pub fn one(&self) -> ElementId {
        self.0.one
    }

    pub fn limits(&self) -> &Limits {
        &self.0.limits
    }

    /// Direct factors when this ring was built as a product, else empty.
    pub fn factors(&self) -> &[Ring] {
        &self.0.factors
    }

    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    /// True when both handles point at the same ring object.
    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator + Clone {
        (0..self.0.order as u32).map(ElementId)
    }

    pub fn contains(&self, x: ElementId) -> bool {
        x.index() < self.0.order
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.0.tables {
            Some(t) => ElementId(t.add[a.index() * self.0.order + b.index()] as u32),
            None => self.0.arith.add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.0.tables {
            Some(t) => ElementId(t.mul[a.index() * self.0.order + b.index()] as u32),
            None => self.0.arith.mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        match &self.0.tables {
            Some(t) => ElementId(t.neg[a.index()] as u32),
            None => self.0.arith.neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, x: ElementId, k: u32) -> ElementId {
        (0..k).fold(self.one(), |acc, _| self.mul(acc, x))
    }

    /// `k · 1`, the image of the integer `k`.
    pub fn int(&self, k: i64) -> ElementId {
        let m = self.int_multiple(self.one(), k.unsigned_abs());
        if k < 0 {
            self.neg(m)
        } else {
            m
        }
    }

    /// `k · x` as a repeated sum.
    pub fn int_multiple(&self, x: ElementId, k: u64) -> ElementId {
        let mut acc = self.zero();
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn commutes(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_commutative(&self) -> bool {
        self.center().len() == self.order()
    }

    /// Human-readable form of an element (residue, tuple or matrix).
    pub fn describe(&self, x: ElementId) -> String {
        self.0.arith.describe(x)
    }

    /// Resolves an element literal: a decimal id, or any text matching
    /// [`Ring::describe`] up to whitespace.
    pub fn parse_element(&self, text: &str) -> Result<ElementId> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let invalid = || RingError::InvalidElement {
            ring: self.label().to_string(),
            element: text.to_string(),
        };
        if !compact.is_empty() && compact.chars().all(|c| c.is_ascii_digit()) {
            let id: u64 = compact.parse().map_err(|_| invalid())?;
            return if (id as usize) < self.order() {
                Ok(ElementId(id as u32))
            } else {
                Err(invalid())
            };
        }
        self.elements()
            .find(|&x| {
                let d: String = self.describe(x).chars().filter(|c| !c.is_whitespace()).collect();
                d == compact
            })
            .ok_or_else(invalid)
    }

    pub(crate) fn check_element(&self, x: ElementId) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(RingError::InvalidElement {
                ring: self.label().to_string(),
                element: x.to_string(),
            })
        }
    }

    /// Additive order of one.
    pub fn characteristic(&self) -> u64 {
        let mut k = 1u64;
        let mut acc = self.one();
        while acc != self.zero() {
            acc = self.add(acc, self.one());
            k += 1;
        }
        k
    }

    /// Cayley tables as CSV: row = left operand id, column = right operand id.
    pub fn table_csv(&self, op: TableOp) -> String {
        let mut out = String::new();
        for a in self.elements() {
            let row: Vec<String> = self
                .elements()
                .map(|b| match op {
                    TableOp::Add => self.add(a, b),
                    TableOp::Mul => self.mul(a, b),
                })
                .map(|c| c.to_string())
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub(crate) fn profile_cache(&self) -> &OnceLock<crate::classify::RingProfile> {
        &self.0.cache.profile
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOp {
    Add,
    Mul,
}

fn build_tables(order: usize, arith: &dyn Arithmetic) -> Tables {
    let fill = |op: &(dyn Fn(ElementId, ElementId) -> ElementId + Sync)| -> Vec<u16> {
        let mut table = vec![0u16; order * order];
        table.par_chunks_mut(order).enumerate().for_each(|(a, row)| {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = op(ElementId(a as u32), ElementId(b as u32)).0 as u16;
            }
        });
        table
    };
    let add = fill(&|a, b| arith.add(a, b));
    let mul = fill(&|a, b| arith.mul(a, b));
    let neg = (0..order as u32).map(|a| arith.neg(ElementId(a)).0 as u16).collect();
    Tables { add, mul, neg }
}

/// Arithmetic of `Z_n` on residues `0..n`.
pub(crate) struct ResidueArithmetic {
    pub(crate) modulus: u32,
}

impl Arithmetic for ResidueArithmetic {
    fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(((a.0 as u64 + b.0 as u64) % self.modulus as u64) as u32)
    }
    fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(((a.0 as u64 * b.0 as u64) % self.modulus as u64) as u32)
    }
    fn neg(&self, a: ElementId) -> ElementId {
        ElementId((self.modulus - a.0) % self.modulus)
    }
}
