//! Rings whose elements are coefficient sequences over base rings.
//!
//! Element ids are mixed-radix numbers over the coordinate digits, first
//! coordinate most significant. A coordinate either ranges over a whole base
//! ring or over a fixed additive subgroup of it.

use std::sync::Arc;

use super::{Arithmetic, ElementId, Ring};

/// No tuple ring within the order cap needs more coordinates than this.
pub(crate) const MAX_COORDS: usize = 17;

pub(crate) type Coords = [ElementId; MAX_COORDS];

pub(crate) type ProductFn = dyn Fn(&[ElementId], &[ElementId], &mut [ElementId]) + Send + Sync;

#[derive(Clone)]
pub(crate) struct Coordinate {
    ring: Ring,
    members: Option<Arc<[ElementId]>>,
    position: Option<Arc<[u32]>>,
}

impl Coordinate {
    pub(crate) fn full(ring: &Ring) -> Self {
        Coordinate {
            ring: ring.clone(),
            members: None,
            position: None,
        }
    }

    /// `members` must be an additive subgroup containing zero.
    pub(crate) fn restricted(ring: &Ring, members: Vec<ElementId>) -> Self {
        let mut position = vec![u32::MAX; ring.order()];
        for (i, m) in members.iter().enumerate() {
            position[m.index()] = i as u32;
        }
        Coordinate {
            ring: ring.clone(),
            members: Some(members.into()),
            position: Some(position.into()),
        }
    }

    pub(crate) fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn size(&self) -> usize {
        self.members.as_ref().map_or(self.ring.order(), |m| m.len())
    }

    fn digit(&self, x: ElementId) -> u64 {
        match &self.position {
            None => x.0 as u64,
            Some(p) => {
                let d = p[x.index()];
                debug_assert!(d != u32::MAX, "value outside the coordinate subgroup");
                d as u64
            }
        }
    }

    fn value(&self, d: u64) -> ElementId {
        match &self.members {
            None => ElementId(d as u32),
            Some(m) => m[d as usize],
        }
    }
}

pub(crate) enum Layout {
    /// `(c0,c1,...)`.
    Tuple,
    /// `n x n` matrix; each cell names a coordinate or is structurally zero.
    Matrix { n: usize, cells: Vec<Option<usize>> },
}

pub(crate) struct TupleArithmetic {
    coords: Vec<Coordinate>,
    weights: Vec<u64>,
    layout: Layout,
    product: Box<ProductFn>,
}

impl TupleArithmetic {
    /// Order of the ring over these coordinates, computed without overflow.
    pub(crate) fn order_of(coords: &[Coordinate]) -> u128 {
        coords.iter().map(|c| c.size() as u128).product()
    }

    pub(crate) fn new(coords: Vec<Coordinate>, layout: Layout, product: Box<ProductFn>) -> Self {
        assert!(coords.len() <= MAX_COORDS, "too many coordinates");
        let mut weights = vec![1u64; coords.len()];
        for i in (0..coords.len().saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * coords[i + 1].size() as u64;
        }
        TupleArithmetic {
            coords,
            weights,
            layout,
            product,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.coords.len()
    }

    pub(crate) fn decode(&self, id: ElementId, out: &mut [ElementId]) {
        let mut rest = id.0 as u64;
        for (i, c) in self.coords.iter().enumerate() {
            let d = rest / self.weights[i];
            rest %= self.weights[i];
            out[i] = c.value(d);
        }
    }

    pub(crate) fn encode(&self, values: &[ElementId]) -> ElementId {
        let id = self
            .coords
            .iter()
            .zip(values)
            .zip(&self.weights)
            .map(|((c, &v), w)| c.digit(v) * w)
            .sum::<u64>();
        ElementId(id as u32)
    }

    fn buffers(&self) -> (Coords, Coords) {
        let z = ElementId(0);
        ([z; MAX_COORDS], [z; MAX_COORDS])
    }
}

impl Arithmetic for TupleArithmetic {
    fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        let (mut x, mut y) = self.buffers();
        let k = self.len();
        self.decode(a, &mut x[..k]);
        self.decode(b, &mut y[..k]);
        for i in 0..k {
            x[i] = self.coords[i].ring.add(x[i], y[i]);
        }
        self.encode(&x[..k])
    }

    fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        let (mut x, mut y) = self.buffers();
        let mut out = [ElementId(0); MAX_COORDS];
        let k = self.len();
        self.decode(a, &mut x[..k]);
        self.decode(b, &mut y[..k]);
        (self.product)(&x[..k], &y[..k], &mut out[..k]);
        self.encode(&out[..k])
    }

    fn neg(&self, a: ElementId) -> ElementId {
        let (mut x, _) = self.buffers();
        let k = self.len();
        self.decode(a, &mut x[..k]);
        for (xi, c) in x[..k].iter_mut().zip(&self.coords) {
            *xi = c.ring.neg(*xi);
        }
        self.encode(&x[..k])
    }

    fn describe(&self, a: ElementId) -> String {
        let (mut x, _) = self.buffers();
        let k = self.len();
        self.decode(a, &mut x[..k]);
        let show = |i: usize| self.coords[i].ring.describe(x[i]);
        match &self.layout {
            Layout::Tuple => {
                let parts: Vec<String> = (0..k).map(show).collect();
                format!("({})", parts.join(","))
            }
            Layout::Matrix { n, cells } => {
                let zero = self.coords[0].ring.describe(self.coords[0].ring.zero());
                let rows: Vec<String> = (0..*n)
                    .map(|i| {
                        let row: Vec<String> = (0..*n)
                            .map(|j| cells[i * n + j].map_or_else(|| zero.clone(), show))
                            .collect();
                        format!("[{}]", row.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
        }
    }
}
