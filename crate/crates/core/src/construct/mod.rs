//! Constructors for concrete finite rings.
//!
//! Every constructor returns a [`Ring`] whose label is its ring-spec text, so
//! labels can be parsed back into the same ring. Elements are coefficient
//! sequences over the base ring, enumerated in mixed radix with the first
//! coefficient most significant.

mod group;

pub use group::{FiniteGroup, GroupRing};

use std::sync::Arc;

use serde::Serialize;

use crate::ring::tuple::{Coordinate, Layout, ProductFn, TupleArithmetic, MAX_COORDS};
use crate::ring::{ElementSubset, ResidueArithmetic, RingMap, SubsetKind};
use crate::{ElementId, Limits, Result, Ring, RingError};

/// `Z_n`.
pub fn zn(n: u32, limits: &Limits) -> Result<Ring> {
    match n {
        0 => Err(RingError::InvalidSize("Z0 is not a finite ring".into())),
        1 => Err(RingError::Trivial),
        _ => Ring::from_arithmetic(
            format!("Z{n}"),
            n as usize,
            ElementId(0),
            ElementId(1),
            Arc::new(ResidueArithmetic { modulus: n }),
            *limits,
        ),
    }
}

/// Assembles a ring over coordinates; `one` lists the coordinates of 1.
fn tuple_ring(
    label: String,
    coords: Vec<Coordinate>,
    layout: Layout,
    one: &[ElementId],
    product: Box<ProductFn>,
    factors: Vec<Ring>,
    limits: &Limits,
) -> Result<Ring> {
    let order = TupleArithmetic::order_of(&coords);
    if order > limits.order_cap as u128 {
        return Err(RingError::OrderCap {
            order,
            cap: limits.order_cap,
        });
    }
    if coords.len() > MAX_COORDS {
        return Err(RingError::InvalidSize(format!(
            "{label} needs {} coordinates, at most {MAX_COORDS} are supported",
            coords.len()
        )));
    }
    let zeros: Vec<ElementId> = coords.iter().map(|c| c.ring().zero()).collect();
    let arith = TupleArithmetic::new(coords, layout, product);
    let zero = arith.encode(&zeros);
    let one = arith.encode(one);
    Ring::assemble(label, order as usize, zero, one, Arc::new(arith), factors, *limits)
}

/// Direct product `R_1 × ... × R_k`.
pub fn product(factors: &[Ring], limits: &Limits) -> Result<Ring> {
    if factors.len() < 2 {
        return Err(RingError::InvalidSize("a product needs at least two factors".into()));
    }
    let label = format!(
        "prod({})",
        factors.iter().map(|f| f.label()).collect::<Vec<_>>().join(",")
    );
    let coords = factors.iter().map(Coordinate::full).collect();
    let one: Vec<ElementId> = factors.iter().map(|f| f.one()).collect();
    let rings = factors.to_vec();
    let product = Box::new(move |a: &[ElementId], b: &[ElementId], out: &mut [ElementId]| {
        for (i, f) in rings.iter().enumerate() {
            out[i] = f.mul(a[i], b[i]);
        }
    });
    tuple_ring(label, coords, Layout::Tuple, &one, product, factors.to_vec(), limits)
}

/// `R^n`, printed as an explicit product.
pub fn power(base: &Ring, n: usize, limits: &Limits) -> Result<Ring> {
    if n == 1 {
        return Ok(base.clone());
    }
    product(&vec![base.clone(); n], limits)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(RingError::InvalidSize("matrix size must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Shared matrix product. `cells[i*n+j]` names the coordinate of entry
/// `(i,j)` or marks it structurally zero; `twist[(i*n+k)*n+j]`, when given,
/// scales the term `a_ik b_kj`.
fn matrix_product(base: Ring, n: usize, cells: Vec<Option<usize>>, twist: Option<Vec<ElementId>>) -> Box<ProductFn> {
    let one = base.one();
    Box::new(move |a: &[ElementId], b: &[ElementId], out: &mut [ElementId]| {
        for i in 0..n {
            for j in 0..n {
                let Some(c) = cells[i * n + j] else { continue };
                let mut acc = base.zero();
                for k in 0..n {
                    let (Some(ik), Some(kj)) = (cells[i * n + k], cells[k * n + j]) else {
                        continue;
                    };
                    let mut term = base.mul(a[ik], b[kj]);
                    if let Some(w) = &twist {
                        let w = w[(i * n + k) * n + j];
                        if w != one {
                            term = base.mul(w, term);
                        }
                    }
                    acc = base.add(acc, term);
                }
                out[c] = acc;
            }
        }
    })
}

fn identity_coords(base: &Ring, n: usize, cells: &[Option<usize>], len: usize) -> Vec<ElementId> {
    let mut one = vec![base.zero(); len];
    for i in 0..n {
        if let Some(c) = cells[i * n + i] {
            one[c] = base.one();
        }
    }
    one
}

fn square_matrix_ring(
    label: String,
    base: &Ring,
    n: usize,
    twist: Option<Vec<ElementId>>,
    limits: &Limits,
) -> Result<Ring> {
    check_n(n)?;
    let cells: Vec<Option<usize>> = (0..n * n).map(Some).collect();
    let coords = vec![Coordinate::full(base); n * n];
    let one = identity_coords(base, n, &cells, n * n);
    let layout = Layout::Matrix {
        n,
        cells: cells.clone(),
    };
    let product = matrix_product(base.clone(), n, cells, twist);
    tuple_ring(label, coords, layout, &one, product, Vec::new(), limits)
}

/// Full matrix ring `M_n(R)`.
pub fn matrix(base: &Ring, n: usize, limits: &Limits) -> Result<Ring> {
    square_matrix_ring(format!("M{n}({})", base.label()), base, n, None, limits)
}

/// Upper triangular matrices `T_n(R)`.
pub fn triangular(base: &Ring, n: usize, limits: &Limits) -> Result<Ring> {
    check_n(n)?;
    let mut cells = vec![None; n * n];
    let mut len = 0;
    for i in 0..n {
        for j in i..n {
            cells[i * n + j] = Some(len);
            len += 1;
        }
    }
    let coords = vec![Coordinate::full(base); len];
    let one = identity_coords(base, n, &cells, len);
    let layout = Layout::Matrix {
        n,
        cells: cells.clone(),
    };
    let product = matrix_product(base.clone(), n, cells, None);
    tuple_ring(
        format!("T{n}({})", base.label()),
        coords,
        layout,
        &one,
        product,
        Vec::new(),
        limits,
    )
}

/// Trivial extension `T(R,R)`: pairs `(r,m)` with
/// `(r1,m1)(r2,m2) = (r1 r2, r1 m2 + m1 r2)`.
pub fn trivial_extension(base: &Ring, limits: &Limits) -> Result<Ring> {
    let r = base.clone();
    let product = Box::new(move |a: &[ElementId], b: &[ElementId], out: &mut [ElementId]| {
        out[0] = r.mul(a[0], b[0]);
        out[1] = r.add(r.mul(a[0], b[1]), r.mul(a[1], b[0]));
    });
    tuple_ring(
        format!("TE({})", base.label()),
        vec![Coordinate::full(base); 2],
        Layout::Tuple,
        &[base.one(), base.zero()],
        product,
        Vec::new(),
        limits,
    )
}

/// `DT(R,R)`: quadruples `(a,m,b,n)` with
/// `(a1a2, a1m2 + m1a2, a1b2 + b1a2, a1n2 + m1b2 + b1m2 + n1a2)`.
pub fn dt_extension(base: &Ring, limits: &Limits) -> Result<Ring> {
    let r = base.clone();
    let product = Box::new(move |x: &[ElementId], y: &[ElementId], out: &mut [ElementId]| {
        let (a1, m1, b1, n1) = (x[0], x[1], x[2], x[3]);
        let (a2, m2, b2, n2) = (y[0], y[1], y[2], y[3]);
        let sum =
            |terms: &[(ElementId, ElementId)]| terms.iter().fold(r.zero(), |acc, &(p, q)| r.add(acc, r.mul(p, q)));
        out[0] = r.mul(a1, a2);
        out[1] = sum(&[(a1, m2), (m1, a2)]);
        out[2] = sum(&[(a1, b2), (b1, a2)]);
        out[3] = sum(&[(a1, n2), (m1, b2), (b1, m2), (n1, a2)]);
    });
    let z = base.zero();
    tuple_ring(
        format!("DT({})", base.label()),
        vec![Coordinate::full(base); 4],
        Layout::Tuple,
        &[base.one(), z, z, z],
        product,
        Vec::new(),
        limits,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EndoName {
    Id,
    Swap,
}

impl EndoName {
    pub fn as_str(self) -> &'static str {
        match self {
            EndoName::Id => "id",
            EndoName::Swap => "swap",
        }
    }
}

/// A verified unital ring endomorphism.
#[derive(Debug, Clone)]
pub struct Endomorphism {
    name: Option<EndoName>,
    map: RingMap,
}

impl Endomorphism {
    pub fn new(map: RingMap) -> Result<Self> {
        Self::named(None, map)
    }

    fn named(name: Option<EndoName>, map: RingMap) -> Result<Self> {
        let base = map.domain();
        let bad = |reason: String| RingError::BadEndomorphism {
            ring: base.label().to_string(),
            reason,
        };
        if !map.codomain().same(base) {
            return Err(bad("domain and codomain differ".into()));
        }
        if !map.report().is_homomorphism() {
            return Err(bad(format!("{:?}", map.report().failures)));
        }
        Ok(Endomorphism { name, map })
    }

    pub fn name(&self) -> Option<EndoName> {
        self.name
    }

    pub fn base(&self) -> &Ring {
        self.map.domain()
    }

    pub fn map(&self) -> &RingMap {
        &self.map
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.map.apply(x)
    }

    fn label(&self) -> &'static str {
        self.name.map_or("custom", EndoName::as_str)
    }

    /// Tables of `α^0, ..., α^{n-1}`.
    fn power_tables(&self, n: usize) -> Vec<Vec<ElementId>> {
        let mut tables = vec![self.base().elements().collect::<Vec<_>>()];
        for k in 1..n {
            let prev = &tables[k - 1];
            tables.push(prev.iter().map(|&x| self.apply(x)).collect());
        }
        tables
    }
}

/// `id` on any ring; `swap` on a product `A × A` of two identical factors.
pub fn named_endomorphism(base: &Ring, name: EndoName) -> Result<Endomorphism> {
    let map = match name {
        EndoName::Id => RingMap::identity(base),
        EndoName::Swap => {
            let f = base.factors();
            if f.len() != 2 || f[0].label() != f[1].label() || f[0].order() != f[1].order() {
                return Err(RingError::SwapShape(base.label().to_string()));
            }
            let m = f[0].order() as u32;
            RingMap::from_fn(base, base, |x| ElementId((x.0 % m) * m + x.0 / m))?
        }
    };
    Endomorphism::named(Some(name), map)
}

/// Truncated convolution ring on `n`-tuples:
/// `c_i = Σ_{k ≤ i} a_k α^k(b_{i-k})`.
fn convolution_ring(label: String, base: &Ring, n: usize, alpha: &Endomorphism, limits: &Limits) -> Result<Ring> {
    check_n(n)?;
    let powers = alpha.power_tables(n);
    let r = base.clone();
    let product = Box::new(move |a: &[ElementId], b: &[ElementId], out: &mut [ElementId]| {
        for i in 0..n {
            let mut acc = r.zero();
            for k in 0..=i {
                let twisted = powers[k][b[i - k].index()];
                acc = r.add(acc, r.mul(a[k], twisted));
            }
            out[i] = acc;
        }
    });
    let mut one = vec![base.zero(); n];
    one[0] = base.one();
    tuple_ring(
        label,
        vec![Coordinate::full(base); n],
        Layout::Tuple,
        &one,
        product,
        Vec::new(),
        limits,
    )
}

/// Skew triangular ring `T_n(R,α)`, re-audited after construction.
pub fn skew_triangular(base: &Ring, n: usize, alpha: &Endomorphism, limits: &Limits) -> Result<Ring> {
    if !alpha.base().same(base) {
        return Err(RingError::BadEndomorphism {
            ring: base.label().to_string(),
            reason: "endomorphism belongs to a different ring".into(),
        });
    }
    let label = format!("T{n}({},{})", base.label(), alpha.label());
    let ring = convolution_ring(label, base, n, alpha, limits)?;
    ring.require_axioms()?;
    Ok(ring)
}

/// `R[x]/⟨x^n⟩`.
pub fn quot_poly(base: &Ring, n: usize, limits: &Limits) -> Result<Ring> {
    let id = named_endomorphism(base, EndoName::Id)?;
    convolution_ring(format!("quotpoly({},{n})", base.label()), base, n, &id, limits)
}

/// Mixed-radix digits of a tuple-ring id whose coordinates are all `radix`.
fn digits(id: ElementId, radix: u32, len: usize) -> Vec<ElementId> {
    let mut rest = id.0;
    let mut out = vec![ElementId(0); len];
    for slot in out.iter_mut().rev() {
        *slot = ElementId(rest % radix);
        rest /= radix;
    }
    out
}

/// Group ring `RG` with its augmentation data, all verified.
pub fn group_ring(base: &Ring, group: &FiniteGroup, limits: &Limits) -> Result<GroupRing> {
    let g = group.order();
    let r = base.clone();
    let table: Vec<usize> = (0..g * g)
        .map(|x| group.op((x / g) as u32, (x % g) as u32) as usize)
        .collect();
    let product = Box::new(move |a: &[ElementId], b: &[ElementId], out: &mut [ElementId]| {
        out.fill(r.zero());
        for x in 0..g {
            for y in 0..g {
                let z = table[x * g + y];
                out[z] = r.add(out[z], r.mul(a[x], b[y]));
            }
        }
    });
    let mut one = vec![base.zero(); g];
    one[group.identity() as usize] = base.one();
    let ring = tuple_ring(
        format!("GR({},{})", base.label(), group.label()),
        vec![Coordinate::full(base); g],
        Layout::Tuple,
        &one,
        product,
        Vec::new(),
        limits,
    )?;
    let radix = base.order() as u32;
    if base.zero() != ElementId(0) {
        return Err(RingError::InvalidSize(
            "group rings need a base with zero at id 0".into(),
        ));
    }
    let augmentation = RingMap::from_fn(&ring, base, |x| {
        digits(x, radix, g)
            .into_iter()
            .fold(base.zero(), |acc, c| base.add(acc, c))
    })?;
    let e = group.identity() as usize;
    let inclusion = RingMap::from_fn(base, &ring, |x| {
        let id = (0..g).fold(0u32, |acc, i| acc * radix + if i == e { x.0 } else { 0 });
        ElementId(id)
    })?;
    let kernel = augmentation.kernel();
    let augmentation_ideal = ring.ideal_from_subset(kernel)?;
    Ok(GroupRing {
        ring,
        base: base.clone(),
        group: group.clone(),
        augmentation,
        inclusion,
        augmentation_ideal,
    })
}

fn require_central(base: &Ring, s: ElementId) -> Result<()> {
    base.check_element(s)?;
    if base.is_central(s) {
        Ok(())
    } else {
        Err(RingError::NotCentral {
            ring: base.label().to_string(),
            element: base.describe(s),
        })
    }
}

/// Prints a scalar as the least `k` with `k·1 = s` when one exists.
fn scalar_label(base: &Ring, s: ElementId) -> String {
    let mut acc = base.zero();
    for k in 0..base.order() {
        if acc == s {
            return k.to_string();
        }
        acc = base.add(acc, base.one());
    }
    base.describe(s)
}

/// Generalized matrix ring `K_s(R)` on `(a,x,y,b)`:
/// `(a1a2 + s x1y2, a1x2 + x1b2, y1a2 + b1y2, s y1x2 + b1b2)`.
pub fn k_s_ring(base: &Ring, s: ElementId, limits: &Limits) -> Result<Ring> {
    require_central(base, s)?;
    let r = base.clone();
    let product = Box::new(move |p: &[ElementId], q: &[ElementId], out: &mut [ElementId]| {
        let (a1, x1, y1, b1) = (p[0], p[1], p[2], p[3]);
        let (a2, x2, y2, b2) = (q[0], q[1], q[2], q[3]);
        out[0] = r.add(r.mul(a1, a2), r.mul(s, r.mul(x1, y2)));
        out[1] = r.add(r.mul(a1, x2), r.mul(x1, b2));
        out[2] = r.add(r.mul(y1, a2), r.mul(b1, y2));
        out[3] = r.add(r.mul(s, r.mul(y1, x2)), r.mul(b1, b2));
    });
    let z = base.zero();
    tuple_ring(
        format!("K({})({})", scalar_label(base, s), base.label()),
        vec![Coordinate::full(base); 4],
        Layout::Matrix {
            n: 2,
            cells: (0..4).map(Some).collect(),
        },
        &[base.one(), z, z, base.one()],
        product,
        Vec::new(),
        limits,
    )
}

/// Formal matrix ring `M_n(R;s)`: `c_ij = Σ_k s^{δ_ikj} a_ik b_kj` with
/// `δ_ikj = 1 + δ_ij - δ_ik - δ_kj`. Re-audited after construction.
pub fn formal_matrix(base: &Ring, n: usize, s: ElementId, limits: &Limits) -> Result<Ring> {
    require_central(base, s)?;
    check_n(n)?;
    let delta = |a: usize, b: usize| (a == b) as i32;
    let mut twist = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                let e = 1 + delta(i, j) - delta(i, k) - delta(k, j);
                twist.push(base.pow(s, e as u32));
            }
        }
    }
    let label = format!("FM{n}({})({})", scalar_label(base, s), base.label());
    let ring = square_matrix_ring(label, base, n, Some(twist), limits)?;
    ring.require_axioms()?;
    Ok(ring)
}

/// Entry constraint of an entry-constrained matrix ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Cell {
    /// The whole base ring.
    Full,
    /// Structurally zero.
    Zero,
    /// `kR`.
    Multiple(u32),
}

impl Cell {
    fn members(self, base: &Ring) -> Vec<ElementId> {
        match self {
            Cell::Full => base.elements().collect(),
            Cell::Zero => vec![base.zero()],
            Cell::Multiple(k) => {
                let set = ElementSubset::from_ids(
                    SubsetKind::Custom,
                    base.order(),
                    base.elements().map(|x| base.int_multiple(x, k as u64)),
                );
                set.iter().collect()
            }
        }
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Full => f.write_str("R"),
            Cell::Zero => f.write_str("0"),
            Cell::Multiple(k) => write!(f, "{k}R"),
        }
    }
}

/// Subring of `M_n(R)` of matrices with entry `(i,j)` in `cells[i*n+j]`.
/// Rejects systems that are not closed under products or miss the identity.
pub fn entry_constrained(base: &Ring, n: usize, cells: &[Cell], limits: &Limits) -> Result<Ring> {
    check_n(n)?;
    if cells.len() != n * n {
        return Err(RingError::InvalidSize(format!(
            "{} cells given for a {n}x{n} matrix",
            cells.len()
        )));
    }
    let sets: Vec<ElementSubset> = cells
        .iter()
        .map(|c| ElementSubset::from_ids(SubsetKind::Custom, base.order(), c.members(base)))
        .collect();
    for i in 0..n {
        if !sets[i * n + i].contains(base.one()) {
            return Err(RingError::ConstraintsNotClosed(format!(
                "diagonal cell ({},{}) = {} does not contain 1",
                i + 1,
                i + 1,
                cells[i * n + i]
            )));
        }
    }
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                let target = &sets[i * n + j];
                for a in sets[i * n + k].iter() {
                    for b in sets[k * n + j].iter() {
                        let p = base.mul(a, b);
                        if !target.contains(p) {
                            return Err(RingError::ConstraintsNotClosed(format!(
                                "cell ({},{}) = {} times cell ({},{}) = {} gives {}·{} = {}, outside cell ({},{}) = {}",
                                i + 1,
                                k + 1,
                                cells[i * n + k],
                                k + 1,
                                j + 1,
                                cells[k * n + j],
                                base.describe(a),
                                base.describe(b),
                                base.describe(p),
                                i + 1,
                                j + 1,
                                cells[i * n + j]
                            )));
                        }
                    }
                }
            }
        }
    }
    let mut coords = Vec::new();
    let mut cell_map = vec![None; n * n];
    for (idx, (cell, set)) in cells.iter().zip(&sets).enumerate() {
        if *cell != Cell::Zero {
            cell_map[idx] = Some(coords.len());
            coords.push(match cell {
                Cell::Full => Coordinate::full(base),
                _ => Coordinate::restricted(base, set.iter().collect()),
            });
        }
    }
    let rows: Vec<String> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| cells[i * n + j].to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    let label = format!("cmat({};{})", base.label(), rows.join(";"));
    let one = identity_coords(base, n, &cell_map, coords.len());
    let layout = Layout::Matrix {
        n,
        cells: cell_map.clone(),
    };
    let product = matrix_product(base.clone(), n, cell_map, None);
    tuple_ring(label, coords, layout, &one, product, Vec::new(), limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn z(n: u32) -> Ring {
        zn(n, &lim()).unwrap()
    }

    #[test]
    fn zn_rejects_degenerate_sizes() {
        assert!(zn(0, &lim()).is_err());
        assert_eq!(zn(1, &lim()).unwrap_err(), RingError::Trivial);
        assert_eq!(z(6).order(), 6);
    }

    #[test]
    fn matrix_ring_over_z2() {
        let m = matrix(&z(2), 2, &lim()).unwrap();
        assert_eq!(m.order(), 16);
        assert_eq!(m.units().len(), 6);
        assert_eq!(m.label(), "M2(Z2)");
        let u = m.parse_element("[[0,1],[1,1]]").unwrap();
        assert_eq!(m.pow(u, 3), m.one());
        assert!(m.audit().passed());
    }

    #[test]
    fn triangular_over_z2() {
        let t = triangular(&z(2), 2, &lim()).unwrap();
        assert_eq!(t.order(), 8);
        assert_eq!(t.describe(t.one()), "[[1,0],[0,1]]");
        assert_eq!(t.jacobson_radical().len(), 2);
        assert!(t.audit().passed());
    }

    #[test]
    fn trivial_extension_square_zero_part() {
        let te = trivial_extension(&z(2), &lim()).unwrap();
        assert_eq!(te.order(), 4);
        let m = te.parse_element("(0,1)").unwrap();
        assert_eq!(te.mul(m, m), te.zero());
        assert!(te.audit().passed());
    }

    #[test]
    fn product_and_swap() {
        let p = product(&[z(2), z(2)], &lim()).unwrap();
        assert_eq!(p.label(), "prod(Z2,Z2)");
        let swap = named_endomorphism(&p, EndoName::Swap).unwrap();
        let x = p.parse_element("(1,0)").unwrap();
        assert_eq!(p.describe(swap.apply(x)), "(0,1)");
        let q = product(&[z(2), z(3)], &lim()).unwrap();
        assert!(matches!(
            named_endomorphism(&q, EndoName::Swap),
            Err(RingError::SwapShape(_))
        ));
        assert!(named_endomorphism(&z(6), EndoName::Id).is_ok());
    }

    #[test]
    fn skew_triangular_swap_twist() {
        let p = product(&[z(2), z(2)], &lim()).unwrap();
        let swap = named_endomorphism(&p, EndoName::Swap).unwrap();
        let t = skew_triangular(&p, 2, &swap, &lim()).unwrap();
        assert_eq!(t.order(), 16);
        assert_eq!(t.label(), "T2(prod(Z2,Z2),swap)");
        let a = t.parse_element("((1,0),(0,0))").unwrap();
        let b = t.parse_element("((0,0),(1,0))").unwrap();
        // c_1 = a_0 α(b_0)... here c_1 = a_0 b_1 + a_1 α(b_0) = (1,0)(1,0).
        assert_eq!(t.describe(t.mul(a, b)), "((0,0),(1,0))");
        assert_eq!(t.describe(t.mul(b, a)), "((0,0),(0,0))");
    }

    #[test]
    fn quot_poly_matches_identity_skew() {
        let base = z(4);
        let id = named_endomorphism(&base, EndoName::Id).unwrap();
        let s = skew_triangular(&base, 3, &id, &lim()).unwrap();
        let q = quot_poly(&base, 3, &lim()).unwrap();
        assert_eq!(s.order(), 64);
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(s.mul(a, b), q.mul(a, b));
            }
        }
        let j = s.jacobson_radical();
        assert_eq!(j.len(), 32);
        assert!(j.iter().all(|x| matches!(s.describe(x).as_bytes()[1], b'0' | b'2')));
    }

    #[test]
    fn group_ring_augmentation() {
        let c2 = FiniteGroup::cyclic_product(&[2]).unwrap();
        let gr = group_ring(&z(4), &c2, &lim()).unwrap();
        assert_eq!(gr.ring.order(), 16);
        assert_eq!(gr.augmentation_ideal.len(), 4);
        assert!(gr.augmentation.verify_retraction(&gr.inclusion).passed());
        let x = gr.ring.parse_element("(1,3)").unwrap();
        assert_eq!(gr.augmentation.apply(x), ElementId(0));
        assert!(gr.augmentation_ideal.iter().all(|d| gr.ring.is_nilpotent(d)));
    }

    #[test]
    fn groups() {
        let g = FiniteGroup::cyclic_product(&[2, 4]).unwrap();
        assert_eq!(g.label(), "C2xC4");
        assert_eq!(g.p_group_prime(), Some(2));
        let h = FiniteGroup::cyclic_product(&[6]).unwrap();
        assert_eq!(h.p_group_prime(), None);
        assert!(FiniteGroup::from_table("bad", 2, vec![0, 1, 1, 1], 0).is_err());
    }

    #[test]
    fn k_s_twisted_involution_is_nilpotent() {
        let base = z(4);
        let k = k_s_ring(&base, ElementId(2), &lim()).unwrap();
        assert_eq!(k.label(), "K(2)(Z4)");
        let w = k.parse_element("[[0,1],[1,0]]").unwrap();
        assert_eq!(k.describe(k.mul(w, w)), "[[2,0],[0,2]]");
        assert_eq!(k.pow(w, 4), k.zero());
        assert!(k.audit().passed());
    }

    #[test]
    fn formal_matrix_agrees_with_k_ring() {
        let base = z(4);
        let fm = formal_matrix(&base, 2, ElementId(2), &lim()).unwrap();
        let k0 = k_s_ring(&base, ElementId(0), &lim()).unwrap();
        assert_eq!(fm.label(), "FM2(2)(Z4)");
        assert_eq!(
            fm.table_csv(crate::ring::TableOp::Mul),
            k0.table_csv(crate::ring::TableOp::Mul)
        );
        let ones = formal_matrix(&base, 2, ElementId(1), &lim()).unwrap();
        let m = matrix(&base, 2, &lim()).unwrap();
        assert_eq!(
            ones.table_csv(crate::ring::TableOp::Mul),
            m.table_csv(crate::ring::TableOp::Mul)
        );
    }

    #[test]
    fn formal_matrix_cross_terms_over_z8() {
        let base = z(8);
        let fm = formal_matrix(&base, 2, ElementId(2), &lim()).unwrap();
        let a = fm.parse_element("[[0,1],[0,0]]").unwrap();
        let b = fm.parse_element("[[0,0],[1,0]]").unwrap();
        assert_eq!(fm.describe(fm.mul(a, b)), "[[4,0],[0,0]]");
    }

    #[test]
    fn non_central_twist_rejected() {
        let m = matrix(&z(2), 2, &lim()).unwrap();
        let e11 = m.parse_element("[[1,0],[0,0]]").unwrap();
        assert!(matches!(k_s_ring(&m, e11, &lim()), Err(RingError::NotCentral { .. })));
    }

    #[test]
    fn entry_constrained_rings() {
        let base = z(4);
        use Cell::*;
        let morita = entry_constrained(&base, 2, &[Full, Full, Multiple(2), Full], &lim()).unwrap();
        assert_eq!(morita.order(), 128);
        assert_eq!(morita.label(), "cmat(Z4;R,R;2R,R)");
        assert!(morita.audit().passed());
        let t2 = entry_constrained(&z(2), 2, &[Full, Full, Zero, Full], &lim()).unwrap();
        assert_eq!(t2.order(), 8);
        let transposed = entry_constrained(&base, 2, &[Full, Multiple(2), Full, Full], &lim());
        assert!(transposed.is_ok());
        let broken = entry_constrained(&base, 2, &[Full, Zero, Full, Multiple(2)], &lim());
        assert!(matches!(broken, Err(RingError::ConstraintsNotClosed(_))));
    }

    #[test]
    fn dt_matches_truncated_bivariate_polynomials() {
        let dt = dt_extension(&z(2), &lim()).unwrap();
        assert_eq!(dt.order(), 16);
        let x = dt.parse_element("(0,1,0,0)").unwrap();
        let y = dt.parse_element("(0,0,1,0)").unwrap();
        assert_eq!(dt.mul(x, x), dt.zero());
        assert_eq!(dt.mul(y, y), dt.zero());
        assert_eq!(dt.describe(dt.mul(x, y)), "(0,0,0,1)");
        assert!(dt.is_commutative());
    }

    #[test]
    fn order_cap_enforced() {
        let small = Limits {
            order_cap: 100,
            ..Limits::default()
        };
        assert!(matches!(matrix(&z(2), 3, &small), Err(RingError::OrderCap { .. })));
    }
}
