//! Code derivation: the length-(n+2) extension over F2 / F2+uF2 and the
//! binary neighbor construction.

use crate::bincode::{pack_bits, BinaryCode, BitMatrix};
use crate::error::{Error, Result};
use crate::groupring::RingMatrix;
use crate::rings::{RingElem, RingId};

/// Inputs of the extension: a generator of a self-dual code over F2 or
/// F2+uF2, a unit c, and a vector X with `<X, X> = 1`.
#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    pub base: RingMatrix,
    pub c: RingElem,
    pub x: Vec<RingElem>,
}

/// Extend a self-dual code of length n to one of length n+2.
///
/// With y_i = `<r_i, X>` the output rows are (1, 0, X) and
/// (y_i, c*y_i, r_i); the span is generator-independent and self-dual
/// because units of these rings square to 1.
pub fn extend(spec: &ExtensionSpec) -> Result<RingMatrix> {
    let ring = spec.base.ring();
    if !matches!(ring, RingId::F2 | RingId::F2U) {
        return Err(Error::Domain(format!(
            "extension requires a code over F2 or F2+uF2, got {ring}"
        )));
    }
    if spec.c.ring() != ring {
        return Err(Error::RingMismatch(ring, spec.c.ring()));
    }
    if !spec.c.is_unit() {
        return Err(Error::Domain(format!("c = {} is not a unit", spec.c)));
    }
    let n = spec.base.cols();
    if spec.x.len() != n {
        return Err(Error::Domain(format!(
            "X has length {}, base code has length {n}",
            spec.x.len()
        )));
    }
    let mut norm = ring.zero();
    for e in &spec.x {
        if e.ring() != ring {
            return Err(Error::RingMismatch(ring, e.ring()));
        }
        norm = norm.checked_add(e.checked_mul(*e)?)?;
    }
    if !norm.is_one() {
        return Err(Error::Domain(format!("<X, X> = {norm}, must be 1")));
    }

    let rows = spec.base.rows();
    let mut out = RingMatrix::zero(ring, rows + 1, n + 2);
    out.set(0, 0, ring.one())?;
    for (j, e) in spec.x.iter().enumerate() {
        out.set(0, 2 + j, *e)?;
    }
    for i in 0..rows {
        let mut y = ring.zero();
        for j in 0..n {
            y = y.checked_add(spec.base.get(i, j).checked_mul(spec.x[j])?)?;
        }
        out.set(i + 1, 0, y)?;
        out.set(i + 1, 1, spec.c.checked_mul(y)?)?;
        for j in 0..n {
            out.set(i + 1, 2 + j, spec.base.get(i, j))?;
        }
    }
    Ok(out)
}

/// Coordinate frame in which a neighbor vector is expressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NeighborCoords {
    /// x is given in the coordinates of the cached standard form; the
    /// recorded column permutation is applied before combining with the
    /// code.
    #[default]
    StandardForm,
    /// x is given directly in the code's own coordinate order.
    Raw,
}

impl NeighborCoords {
    pub fn label(self) -> &'static str {
        match self {
            NeighborCoords::StandardForm => "standard-form",
            NeighborCoords::Raw => "raw",
        }
    }
}

/// Inputs of the neighbor construction: a self-dual binary code and a
/// vector x outside it (of even weight, so that x is self-orthogonal).
#[derive(Clone, Debug)]
pub struct NeighborSpec {
    pub base: BinaryCode,
    pub x: Vec<bool>,
    pub coords: NeighborCoords,
}

/// The neighbor `D = < <x>^perp intersect C, x >`: a self-dual code whose
/// intersection with C has dimension k-1.
pub fn neighbor(spec: &NeighborSpec) -> Result<BinaryCode> {
    let c = &spec.base;
    let n = c.n();
    let k = c.k();
    if !c.is_self_dual() {
        return Err(Error::Domain("neighbor construction requires a self-dual base".into()));
    }
    if spec.x.len() != n {
        return Err(Error::Domain(format!("x has length {}, code has length {n}", spec.x.len())));
    }
    let weight = spec.x.iter().filter(|&&b| b).count();
    if weight % 2 != 0 {
        return Err(Error::Domain(format!(
            "x has odd weight {weight}; an odd-weight x is not self-orthogonal and the result could not be self-dual"
        )));
    }

    // map x into the code's own coordinates if it was given in
    // standard-form coordinates
    let x_bits: Vec<bool> = match spec.coords {
        NeighborCoords::Raw => spec.x.clone(),
        NeighborCoords::StandardForm => {
            let (_, perm) = c.standard_form();
            let mut mapped = vec![false; n];
            for (j, &src) in perm.iter().enumerate() {
                mapped[src] = spec.x[j];
            }
            mapped
        }
    };
    let x = pack_bits(&x_bits);
    if c.contains(&x) {
        return Err(Error::Domain("x lies in the code; not a proper neighbor".into()));
    }

    // rows orthogonal to x stay; the rest are paired off against one of them
    let gen = c.generator();
    let odd: Vec<usize> =
        (0..k).filter(|&r| crate::bincode::dot_parity(gen.row(r), &x)).collect();
    // x not in C = C^perp, so some generator row meets x oddly
    debug_assert!(!odd.is_empty(), "x in C^perp contradicts x not in C for self-dual C");
    let pivot = odd[0];
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(k);
    for r in 0..k {
        if r == pivot {
            continue;
        }
        let mut row = gen.row_vec(r);
        if odd.contains(&r) {
            for (a, b) in row.iter_mut().zip(gen.row(pivot)) {
                *a ^= b;
            }
        }
        rows.push(row);
    }
    rows.push(x);
    let d = BinaryCode::from_packed_rows(n, rows)?;

    // structural guarantees of the construction
    debug_assert_eq!(d.k(), k);
    debug_assert!(d.is_self_dual());
    debug_assert_eq!(intersection_dim(c, &d), k - 1);
    Ok(d)
}

/// dim(C intersect D) computed from dim(C + D) by stacking generators.
pub fn intersection_dim(c: &BinaryCode, d: &BinaryCode) -> usize {
    let mut rows: Vec<Vec<u64>> = (0..c.k()).map(|r| c.generator().row_vec(r)).collect();
    rows.extend((0..d.k()).map(|r| d.generator().row_vec(r)));
    let sum_dim = BitMatrix::from_packed_rows(c.n(), rows).rank();
    c.k() + d.k() - sum_dim
}
