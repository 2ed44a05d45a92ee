//! Gray maps between the four alphabets and compositions down to F2.
//!
//! The maps, all additive and orthogonality-preserving:
//!
//! - `phi1`: F2+uF2 -> F2^2, a + bu -> (b, a+b);
//! - `psi_f4`: F4 -> F2^2, a*w + b*w_bar -> (a, b);
//! - `psi_f4u`: F4+uF4 -> (F2+uF2)^2, same decomposition with F2+uF2
//!   coefficients;
//! - `phi_f4u`: F4+uF4 -> F4^2, a + bu -> (b, a+b).
//!
//! Vector images use block concatenation: the whole first-component half
//! followed by the whole second-component half, reading the image pair
//! (x, y) of an n-vector as the 2n-vector (x_1..x_n, y_1..y_n).
//!
//! The canonical route from F4+uF4 to binary is `phi1 . psi_f4u`; the
//! composition `psi_f4 . phi_f4u` lands in an equivalent code and is kept
//! selectable for cross-checks.

use crate::bincode::{pack_bits, BinaryCode};
use crate::error::{Error, Result};
use crate::groupring::RingMatrix;
use crate::rings::{RingElem, RingId};

/// One Gray map stage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrayStage {
    /// F2+uF2 -> F2, factor 2.
    Phi1,
    /// F4 -> F2, factor 2.
    PsiF4,
    /// F4+uF4 -> F2+uF2, factor 2.
    PsiF4U,
    /// F4+uF4 -> F4, factor 2.
    PhiF4U,
}

impl GrayStage {
    pub fn source(self) -> RingId {
        match self {
            GrayStage::Phi1 => RingId::F2U,
            GrayStage::PsiF4 => RingId::F4,
            GrayStage::PsiF4U | GrayStage::PhiF4U => RingId::F4U,
        }
    }

    pub fn target(self) -> RingId {
        match self {
            GrayStage::Phi1 | GrayStage::PsiF4 => RingId::F2,
            GrayStage::PsiF4U => RingId::F2U,
            GrayStage::PhiF4U => RingId::F4,
        }
    }

    pub fn apply(self, v: &[RingElem]) -> Result<Vec<RingElem>> {
        match self {
            GrayStage::Phi1 => phi1(v),
            GrayStage::PsiF4 => psi_f4(v),
            GrayStage::PsiF4U => psi_f4u(v),
            GrayStage::PhiF4U => phi_f4u(v),
        }
    }
}

/// An ordered list of stages taking one alphabet down to F2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayChain {
    source: RingId,
    stages: Vec<GrayStage>,
}

impl GrayChain {
    /// The canonical chain for each ring: empty for F2, `phi1` for
    /// F2+uF2, `psi_f4` for F4 and `phi1 . psi_f4u` for F4+uF4.
    pub fn canonical(source: RingId) -> Self {
        let stages = match source {
            RingId::F2 => vec![],
            RingId::F2U => vec![GrayStage::Phi1],
            RingId::F4 => vec![GrayStage::PsiF4],
            RingId::F4U => vec![GrayStage::PsiF4U, GrayStage::Phi1],
        };
        GrayChain { source, stages }
    }

    /// The alternate F4+uF4 route `psi_f4 . phi_f4u`.
    pub fn alternate_f4u() -> Self {
        GrayChain { source: RingId::F4U, stages: vec![GrayStage::PhiF4U, GrayStage::PsiF4] }
    }

    pub fn source(&self) -> RingId {
        self.source
    }

    pub fn stages(&self) -> &[GrayStage] {
        &self.stages
    }

    /// Length multiplier of the full chain: 1, 2 or 4.
    pub fn expansion(&self) -> usize {
        1 << self.stages.len()
    }

    /// Map a vector down to F2.
    pub fn apply(&self, v: &[RingElem]) -> Result<Vec<RingElem>> {
        if let Some(e) = v.iter().find(|e| e.ring() != self.source) {
            return Err(Error::RingMismatch(self.source, e.ring()));
        }
        let mut cur = v.to_vec();
        for stage in &self.stages {
            cur = stage.apply(&cur)?;
        }
        Ok(cur)
    }

    /// Map a vector to packed bits.
    pub fn apply_to_bits(&self, v: &[RingElem]) -> Result<Vec<u64>> {
        let img = self.apply(v)?;
        let bits: Vec<bool> = img.iter().map(|e| !e.is_zero()).collect();
        Ok(pack_bits(&bits))
    }
}

fn expect_ring(v: &[RingElem], ring: RingId) -> Result<()> {
    match v.iter().find(|e| e.ring() != ring) {
        Some(e) => Err(Error::RingMismatch(ring, e.ring())),
        None => Ok(()),
    }
}

/// a + bu -> (b, a+b) over F2, block layout.
pub fn phi1(v: &[RingElem]) -> Result<Vec<RingElem>> {
    expect_ring(v, RingId::F2U)?;
    let mut left = Vec::with_capacity(v.len());
    let mut right = Vec::with_capacity(v.len());
    for x in v {
        let (a, b) = x.u_decompose()?;
        left.push(b);
        right.push(a.checked_add(b)?);
    }
    left.extend(right);
    Ok(left)
}

/// a*w + b*w_bar -> (a, b) over F2, block layout.
pub fn psi_f4(v: &[RingElem]) -> Result<Vec<RingElem>> {
    expect_ring(v, RingId::F4)?;
    let mut left = Vec::with_capacity(v.len());
    let mut right = Vec::with_capacity(v.len());
    for x in v {
        let (a, b) = x.omega_decompose()?;
        left.push(a);
        right.push(b);
    }
    left.extend(right);
    Ok(left)
}

/// a*w + b*w_bar -> (a, b) over F2+uF2, block layout.
pub fn psi_f4u(v: &[RingElem]) -> Result<Vec<RingElem>> {
    expect_ring(v, RingId::F4U)?;
    let mut left = Vec::with_capacity(v.len());
    let mut right = Vec::with_capacity(v.len());
    for x in v {
        let (a, b) = x.omega_decompose()?;
        left.push(a);
        right.push(b);
    }
    left.extend(right);
    Ok(left)
}

/// a + bu -> (b, a+b) over F4, block layout.
pub fn phi_f4u(v: &[RingElem]) -> Result<Vec<RingElem>> {
    expect_ring(v, RingId::F4U)?;
    let mut left = Vec::with_capacity(v.len());
    let mut right = Vec::with_capacity(v.len());
    for x in v {
        let (a, b) = x.u_decompose()?;
        left.push(b);
        right.push(a.checked_add(b)?);
    }
    left.extend(right);
    Ok(left)
}

/// Lee weight: the Hamming weight of the canonical binary image.
pub fn lee_weight(x: RingElem) -> usize {
    let chain = GrayChain::canonical(x.ring());
    chain
        .apply(&[x])
        .expect("canonical chain matches the ring")
        .iter()
        .filter(|e| !e.is_zero())
        .count()
}

/// F2-module generators whose images span the binary image of a code:
/// 1 for F2, {1, u} for F2+uF2, {1, w} for F4, {1, u, w, uw} for F4+uF4.
pub fn module_basis(ring: RingId) -> Vec<RingElem> {
    let bits: &[u8] = match ring {
        RingId::F2 => &[0b0001],
        RingId::F2U => &[0b0001, 0b0010],
        RingId::F4 => &[0b0001, 0b0100],
        RingId::F4U => &[0b0001, 0b0010, 0b0100, 0b1000],
    };
    bits.iter().map(|&b| RingElem::new(ring, b).expect("basis element")).collect()
}

/// Image of a code under a single Gray stage, as a generator over the
/// stage's target ring.
///
/// The source ring is a free rank-2 module over the target ring (basis
/// {1, u} or {1, w}), and each stage is target-ring linear, so the image
/// module is generated by the images of r and m*r for each source row r,
/// where m is the second basis element.
pub fn stage_image_generator(gen: &RingMatrix, stage: GrayStage) -> Result<RingMatrix> {
    if gen.ring() != stage.source() {
        return Err(Error::RingMismatch(stage.source(), gen.ring()));
    }
    let second = match stage {
        GrayStage::Phi1 | GrayStage::PhiF4U => RingElem::u_gen(gen.ring())?,
        GrayStage::PsiF4 | GrayStage::PsiF4U => RingElem::omega(gen.ring())?,
    };
    let mut out = RingMatrix::zero(stage.target(), 2 * gen.rows(), 2 * gen.cols());
    for r in 0..gen.rows() {
        let row = gen.row_elems(r);
        let scaled: Result<Vec<RingElem>> = row.iter().map(|e| e.checked_mul(second)).collect();
        for (slot, img) in [stage.apply(&row)?, stage.apply(&scaled?)?].into_iter().enumerate() {
            for (j, e) in img.into_iter().enumerate() {
                out.set(2 * r + slot, j, e)?;
            }
        }
    }
    Ok(out)
}

/// Binary image of the code generated by a ring matrix: apply the chain
/// to every scalar multiple of each row by a module-basis element, then
/// row-reduce over F2.
///
/// For a self-dual input of free rank k the image is a binary self-dual
/// code of length `expansion * n` and dimension `expansion * k`; for a
/// non-self-dual input the image is still computed (the preservation
/// guarantees are simply void).
pub fn binary_image(gen: &RingMatrix, chain: &GrayChain) -> Result<BinaryCode> {
    if gen.ring() != chain.source() {
        return Err(Error::RingMismatch(chain.source(), gen.ring()));
    }
    let basis = module_basis(gen.ring());
    let n_bits = gen.cols() * chain.expansion();
    let mut rows = Vec::with_capacity(gen.rows() * basis.len());
    for r in 0..gen.rows() {
        let row = gen.row_elems(r);
        for m in &basis {
            let scaled: Result<Vec<RingElem>> =
                row.iter().map(|e| e.checked_mul(*m)).collect();
            rows.push(chain.apply_to_bits(&scaled?)?);
        }
    }
    BinaryCode::from_packed_rows(n_bits, rows)
}
