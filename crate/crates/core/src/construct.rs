//! The bordered four-block generator matrix and its self-duality
//! conditions.
//!
//! Given group-ring elements v1, v2 over a group of odd order p and four
//! ring scalars g1..g4, the generator is the (2p+2) x (4p+4) matrix
//! `[I | A B; B^T A^T]` where A is the (p+1) x (p+1) bordered matrix with
//! corner g1, border g2 and interior sigma(v1), and B likewise with g3,
//! g4 and sigma(v2).
//!
//! Five conditions on (v1, v2, g1..g4) guarantee self-duality over the
//! ring; they are sufficient but not necessary, so the authoritative test
//! is always `G * G^T = 0` on the built matrix.

use crate::error::{Error, Result};
use crate::groupring::{GroupRingElem, GroupSpec, RingMatrix};
use crate::rings::{RingElem, RingId};

/// Inputs of the construction: the group, the coefficient ring, the four
/// border scalars and the two group-ring elements.
#[derive(Clone, Debug)]
pub struct ConstructionParams {
    group: GroupSpec,
    ring: RingId,
    gamma: [RingElem; 4],
    v1: GroupRingElem,
    v2: GroupRingElem,
}

impl ConstructionParams {
    pub fn new(
        group: GroupSpec,
        ring: RingId,
        gamma: [RingElem; 4],
        v1: GroupRingElem,
        v2: GroupRingElem,
    ) -> Result<Self> {
        let p = group.order();
        if p % 2 == 0 {
            return Err(Error::Domain(format!("group order {p} must be odd")));
        }
        if p < 3 {
            return Err(Error::Domain("group order must be at least 3".into()));
        }
        for g in &gamma {
            if g.ring() != ring {
                return Err(Error::RingMismatch(ring, g.ring()));
            }
        }
        for v in [&v1, &v2] {
            if v.ring() != ring {
                return Err(Error::RingMismatch(ring, v.ring()));
            }
            if v.group() != &group {
                return Err(Error::GroupMismatch(group.literal(), v.group().literal()));
            }
        }
        Ok(ConstructionParams { group, ring, gamma, v1, v2 })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn gamma(&self) -> &[RingElem; 4] {
        &self.gamma
    }

    pub fn v1(&self) -> &GroupRingElem {
        &self.v1
    }

    pub fn v2(&self) -> &GroupRingElem {
        &self.v2
    }

    /// Binary length of the Gray image of the constructed code.
    pub fn binary_length(&self) -> usize {
        (4 * self.group.order() + 4) * self.ring.binary_expansion()
    }
}

/// Evaluation of the five self-duality conditions plus the two derived
/// coefficient sums.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    /// v1 v2 = v2 v1.
    pub commuting: bool,
    /// g1^2 + g2^2 + g3^2 + g4^2 = 1.
    pub gamma_square_sum: bool,
    /// v1 v1* + v2 v2* + (g2+g4)^2 ghat + 1 = 0.
    pub products_left: bool,
    /// v1* v1 + v2* v2 + (g2+g4)^2 ghat + 1 = 0.
    pub products_right: bool,
    /// g1 = delta1 and g3 = delta2.
    pub border_sums: bool,
    /// Sum of the coefficients of v1.
    pub delta1: RingElem,
    /// Sum of the coefficients of v2.
    pub delta2: RingElem,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.commuting
            && self.gamma_square_sum
            && self.products_left
            && self.products_right
            && self.border_sums
    }
}

/// Cheap search pre-filter derived from the unit/non-unit corollaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScreenVerdict {
    /// The corollary hypotheses do not apply (ring not F2/F2+uF2, or
    /// g2+g4 is a unit); nothing can be concluded.
    Inapplicable,
    /// The candidate is consistent with both corollaries.
    Consistent,
    /// The candidate contradicts a corollary and cannot generate a
    /// self-dual code.
    CannotBeSelfDual(String),
}

/// Build the (2p+2) x (4p+4) generator `[I | A B; B^T A^T]`.
pub fn build_generator(params: &ConstructionParams) -> RingMatrix {
    let p = params.group.order();
    let k = 2 * p + 2;
    let n = 4 * p + 4;
    let ring = params.ring;
    let [g1, g2, g3, g4] = params.gamma;
    let s1 = params.v1.sigma();
    let s2 = params.v2.sigma();
    let s1t = s1.transpose();
    let s2t = s2.transpose();

    let mut m = RingMatrix::zero(ring, k, n);
    for i in 0..k {
        m.set(i, i, ring.one()).expect("same ring");
    }
    // bordered block: corner, first row and first column of border scalar,
    // interior sigma image
    let mut place = |row0: usize, col0: usize, corner: RingElem, border: RingElem, s: &RingMatrix| {
        m.set(row0, col0, corner).expect("same ring");
        for t in 1..=p {
            m.set(row0, col0 + t, border).expect("same ring");
            m.set(row0 + t, col0, border).expect("same ring");
        }
        for r in 0..p {
            for c in 0..p {
                m.set(row0 + 1 + r, col0 + 1 + c, s.get(r, c)).expect("same ring");
            }
        }
    };
    place(0, k, g1, g2, &s1); // A
    place(0, k + p + 1, g3, g4, &s2); // B
    place(p + 1, k, g3, g4, &s2t); // B^T
    place(p + 1, k + p + 1, g1, g2, &s1t); // A^T
    m
}

/// Evaluate the five conditions exactly in the group ring.
pub fn check_conditions(params: &ConstructionParams) -> ConditionReport {
    let ring = params.ring;
    let [g1, g2, g3, g4] = params.gamma;
    let v1 = &params.v1;
    let v2 = &params.v2;

    let commuting = v1.mul(v2).expect("compatible") == v2.mul(v1).expect("compatible");

    let square_sum = params
        .gamma
        .iter()
        .fold(ring.zero(), |acc, g| acc.checked_add(g.square()).expect("same ring"));
    let gamma_square_sum = square_sum.is_one();

    let border_factor = g2.checked_add(g4).expect("same ring").square();
    let hat = GroupRingElem::hat(params.group.clone(), ring);
    let id = GroupRingElem::identity(params.group.clone(), ring);
    let tail = hat.scale(border_factor).expect("same ring").add(&id).expect("compatible");

    let left = v1
        .mul(&v1.involution())
        .expect("compatible")
        .add(&v2.mul(&v2.involution()).expect("compatible"))
        .expect("compatible")
        .add(&tail)
        .expect("compatible");
    let right = v1
        .involution()
        .mul(v1)
        .expect("compatible")
        .add(&v2.involution().mul(v2).expect("compatible"))
        .expect("compatible")
        .add(&tail)
        .expect("compatible");

    let delta1 = v1.coeff_sum();
    let delta2 = v2.coeff_sum();

    ConditionReport {
        commuting,
        gamma_square_sum,
        products_left: left.is_zero(),
        products_right: right.is_zero(),
        border_sums: g1 == delta1 && g3 == delta2,
        delta1,
        delta2,
    }
}

/// Self-duality over the ring: the input must have the form `[I | R]`
/// with 2k columns; the code it generates is self-dual iff `G * G^T = 0`
/// (self-orthogonality plus free rank n/2).
pub fn is_self_dual_over_ring(g: &RingMatrix) -> Result<bool> {
    let k = g.rows();
    if g.cols() != 2 * k || k == 0 {
        return Err(Error::UnsupportedShape(format!(
            "expected [I | R] with shape k x 2k, got {} x {}",
            k,
            g.cols()
        )));
    }
    for i in 0..k {
        for j in 0..k {
            let e = g.get(i, j);
            let ok = if i == j { e.is_one() } else { e.is_zero() };
            if !ok {
                return Err(Error::UnsupportedShape(
                    "left half is not the identity matrix".into(),
                ));
            }
        }
    }
    let ring = g.ring();
    for i in 0..k {
        for j in i..k {
            let mut dot = ring.zero();
            for c in 0..g.cols() {
                dot = dot
                    .checked_add(g.get(i, c).checked_mul(g.get(j, c)).expect("same ring"))
                    .expect("same ring");
            }
            if !dot.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Apply the unit/non-unit corollaries as a screening pre-filter.
///
/// When g2+g4 is a non-unit, a self-dual outcome forces one of v1, v2 to
/// be a unitary unit and the other a non-unit, and v1*v1 + v2*v2 to be a
/// non-unit. This is a necessary-condition screen only; it never replaces
/// the full self-duality check.
pub fn corollary_screen(params: &ConstructionParams) -> ScreenVerdict {
    if !matches!(params.ring, RingId::F2 | RingId::F2U) {
        return ScreenVerdict::Inapplicable;
    }
    let border = params.gamma[1].checked_add(params.gamma[3]).expect("same ring");
    if border.is_unit() {
        return ScreenVerdict::Inapplicable;
    }
    let v1 = &params.v1;
    let v2 = &params.v2;
    let v1_unitary = v1.is_unitary_unit();
    let v2_unitary = v2.is_unitary_unit();
    let v1_unit = v1.is_unit();
    let v2_unit = v2.is_unit();
    let split_ok = (v1_unitary && !v2_unit) || (v2_unitary && !v1_unit);
    if !split_ok {
        return ScreenVerdict::CannotBeSelfDual(
            "neither (v1 unitary unit, v2 non-unit) nor (v2 unitary unit, v1 non-unit)".into(),
        );
    }
    let starred_sum = v1
        .involution()
        .mul(v1)
        .expect("compatible")
        .add(&v2.involution().mul(v2).expect("compatible"))
        .expect("compatible");
    if starred_sum.is_unit() {
        return ScreenVerdict::CannotBeSelfDual("v1*v1 + v2*v2 is a unit".into());
    }
    ScreenVerdict::Consistent
}
