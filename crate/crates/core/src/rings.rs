//! Exact arithmetic, unit predicates and text codecs for the four
//! alphabets F2, F2+uF2, F4 and F4+uF4.
//!
//! Every element is stored as a 4-bit coefficient vector over F2 in the
//! ordered basis {uw, w, u, 1} (most significant bit first), where u^2 = 0
//! and w^2 = w + 1. The smaller rings are subrings of F4+uF4 that simply
//! leave the unused basis slots at zero, so a single multiplication kernel
//! serves all four alphabets.
//!
//! Shorthand codecs:
//!
//! | ring    | tokens                        |
//! |---------|-------------------------------|
//! | F2      | `0`, `1`                      |
//! | F2+uF2  | `0`, `1`, `u`, `3` (= 1+u)    |
//! | F4      | `0`, `1`, `w`, `w+1`          |
//! | F4+uF4  | hex digit `0`–`F`             |
//!
//! The hex digit is read as the 4-bit string in basis order, e.g. `9` =
//! `1001` = 1 + uw and `C` = `1100` = w + uw.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Basis slot of the coefficient of 1.
const BIT_ONE: u8 = 0b0001;
/// Basis slot of the coefficient of u.
const BIT_U: u8 = 0b0010;
/// Basis slot of the coefficient of w.
const BIT_W: u8 = 0b0100;
/// Basis slot of the coefficient of uw.
const BIT_UW: u8 = 0b1000;

/// Products of the basis monomials {1, u, w, uw}, as 4-bit vectors.
///
/// Row/column index is the basis slot (0 = 1, 1 = u, 2 = w, 3 = uw).
/// Derived from u^2 = 0 and w^2 = w + 1: for example w * w = 1 + w and
/// w * uw = u(w + 1) = u + uw.
const BASIS_MUL: [[u8; 4]; 4] = [
    [BIT_ONE, BIT_U, BIT_W, BIT_UW],
    [BIT_U, 0, BIT_UW, 0],
    [BIT_W, BIT_UW, BIT_ONE | BIT_W, BIT_U | BIT_UW],
    [BIT_UW, 0, BIT_U | BIT_UW, 0],
];

const fn mul_bits(a: u8, b: u8) -> u8 {
    let mut out = 0u8;
    let mut i = 0;
    while i < 4 {
        if a & (1 << i) != 0 {
            let mut j = 0;
            while j < 4 {
                if b & (1 << j) != 0 {
                    out ^= BASIS_MUL[i][j];
                }
                j += 1;
            }
        }
        i += 1;
    }
    out
}

const fn build_mul_table() -> [[u8; 16]; 16] {
    let mut t = [[0u8; 16]; 16];
    let mut a = 0;
    while a < 16 {
        let mut b = 0;
        while b < 16 {
            t[a][b] = mul_bits(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    t
}

/// Full 16x16 multiplication table of F4+uF4; the subrings use the
/// relevant corner of it.
const MUL_TABLE: [[u8; 16]; 16] = build_mul_table();

/// Tag identifying one of the four coefficient rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingId {
    /// The binary field.
    F2,
    /// F2 + uF2 with u^2 = 0.
    F2U,
    /// The quartic field F2(w), w^2 = w + 1.
    F4,
    /// F4 + uF4 with u^2 = 0.
    F4U,
}

impl RingId {
    pub const ALL: [RingId; 4] = [RingId::F2, RingId::F2U, RingId::F4, RingId::F4U];

    /// Number of elements: 2, 4, 4 and 16 respectively.
    pub fn size(self) -> usize {
        match self {
            RingId::F2 => 2,
            RingId::F2U | RingId::F4 => 4,
            RingId::F4U => 16,
        }
    }

    /// Mask of basis slots this ring may occupy.
    pub fn mask(self) -> u8 {
        match self {
            RingId::F2 => BIT_ONE,
            RingId::F2U => BIT_ONE | BIT_U,
            RingId::F4 => BIT_ONE | BIT_W,
            RingId::F4U => 0b1111,
        }
    }

    /// True for the two fields, false for the chain rings with u.
    pub fn is_field(self) -> bool {
        matches!(self, RingId::F2 | RingId::F4)
    }

    /// Residue ring modulo u (the ring itself for the fields).
    pub fn residue(self) -> RingId {
        match self {
            RingId::F2 | RingId::F2U => RingId::F2,
            RingId::F4 | RingId::F4U => RingId::F4,
        }
    }

    /// Expansion factor of the canonical Gray chain down to F2.
    pub fn binary_expansion(self) -> usize {
        match self {
            RingId::F2 => 1,
            RingId::F2U | RingId::F4 => 2,
            RingId::F4U => 4,
        }
    }

    pub(crate) fn mul_bits(self, a: u8, b: u8) -> u8 {
        MUL_TABLE[a as usize][b as usize]
    }

    pub(crate) fn is_unit_bits(self, a: u8) -> bool {
        if self.is_field() {
            a != 0
        } else {
            // Local ring with maximal ideal (u): unit iff nonzero mod u.
            a & (BIT_ONE | BIT_W) != 0
        }
    }

    /// All elements of the ring in increasing bit order.
    pub fn elements(self) -> impl Iterator<Item = RingElem> {
        let mask = self.mask();
        (0u8..16).filter(move |b| b & !mask == 0).map(move |bits| RingElem { ring: self, bits })
    }

    pub fn zero(self) -> RingElem {
        RingElem { ring: self, bits: 0 }
    }

    pub fn one(self) -> RingElem {
        RingElem { ring: self, bits: BIT_ONE }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RingId::F2 => "F2",
            RingId::F2U => "F2+uF2",
            RingId::F4 => "F4",
            RingId::F4U => "F4+uF4",
        };
        f.write_str(s)
    }
}

impl FromStr for RingId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_uppercase();
        match norm.as_str() {
            "F2" => Ok(RingId::F2),
            "F2U" | "F2+UF2" => Ok(RingId::F2U),
            "F4" => Ok(RingId::F4),
            "F4U" | "F4+UF4" => Ok(RingId::F4U),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown ring `{s}`") }),
        }
    }
}

/// A tagged element of one of the four rings.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: RingId,
    bits: u8,
}

impl RingElem {
    /// Build an element from its 4-bit coefficient vector in the basis
    /// {uw, w, u, 1}; the bits must lie inside the ring's valid slots.
    pub fn new(ring: RingId, bits: u8) -> Result<Self> {
        if bits & !ring.mask() != 0 {
            return Err(Error::Domain(format!(
                "bit pattern {bits:#06b} is not an element of {ring}"
            )));
        }
        Ok(RingElem { ring, bits })
    }

    pub fn ring(self) -> RingId {
        self.ring
    }

    /// Raw 4-bit coefficient vector; equals the hex digit of the F4+uF4 codec.
    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn is_one(self) -> bool {
        self.bits == BIT_ONE
    }

    /// The element u (only in the chain rings).
    pub fn u_gen(ring: RingId) -> Result<Self> {
        Self::new(ring, BIT_U)
    }

    /// The element w (only in F4 and F4+uF4).
    pub fn omega(ring: RingId) -> Result<Self> {
        Self::new(ring, BIT_W)
    }

    /// w-bar = 1 + w = w^2, the other root of x^2 + x + 1.
    pub fn omega_bar(ring: RingId) -> Result<Self> {
        Self::new(ring, BIT_ONE | BIT_W)
    }

    fn require_same_ring(self, rhs: Self) -> Result<()> {
        if self.ring != rhs.ring {
            Err(Error::RingMismatch(self.ring, rhs.ring))
        } else {
            Ok(())
        }
    }

    /// Characteristic-2 addition (coefficientwise XOR).
    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.require_same_ring(rhs)?;
        Ok(RingElem { ring: self.ring, bits: self.bits ^ rhs.bits })
    }

    /// Product under u^2 = 0 and w^2 = w + 1.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.require_same_ring(rhs)?;
        Ok(RingElem { ring: self.ring, bits: self.ring.mul_bits(self.bits, rhs.bits) })
    }

    pub fn square(self) -> Self {
        RingElem { ring: self.ring, bits: self.ring.mul_bits(self.bits, self.bits) }
    }

    /// True iff the element is invertible. In the chain rings this holds
    /// iff the image modulo u is nonzero; in the fields iff nonzero.
    pub fn is_unit(self) -> bool {
        self.ring.is_unit_bits(self.bits)
    }

    /// Multiplicative inverse, when one exists.
    pub fn inverse(self) -> Option<Self> {
        self.ring.elements().find(|y| self.ring.mul_bits(self.bits, y.bits) == BIT_ONE)
    }

    /// Image modulo u in the residue field (identity on the fields).
    pub fn residue_mod_u(self) -> RingElem {
        let res = self.ring.residue();
        RingElem { ring: res, bits: self.bits & (BIT_ONE | BIT_W) & res.mask() }
    }

    /// Re-tag into a larger ring containing this one (subring embedding).
    pub fn lift_to(self, ring: RingId) -> Result<Self> {
        RingElem::new(ring, self.bits)
    }

    /// Decompose x = a*w + b*w_bar over the index-2 subring
    /// (F2 for F4 inputs, F2+uF2 for F4+uF4 inputs).
    ///
    /// Writing x = x0 + x1 u + x2 w + x3 uw, matching coefficients of the
    /// basis gives b = x0 + x1 u and a = (x0 + x2) + (x1 + x3) u.
    pub fn omega_decompose(self) -> Result<(RingElem, RingElem)> {
        let sub = match self.ring {
            RingId::F4 => RingId::F2,
            RingId::F4U => RingId::F2U,
            r => {
                return Err(Error::Domain(format!(
                    "omega decomposition requires F4 or F4+uF4, got {r}"
                )))
            }
        };
        let x0 = self.bits & 1;
        let x1 = (self.bits >> 1) & 1;
        let x2 = (self.bits >> 2) & 1;
        let x3 = (self.bits >> 3) & 1;
        let a = (x0 ^ x2) | ((x1 ^ x3) << 1);
        let b = x0 | (x1 << 1);
        Ok((RingElem { ring: sub, bits: a }, RingElem { ring: sub, bits: b }))
    }

    /// Split x = a + b*u over the w-subring (F2 for F2+uF2, F4 for F4+uF4).
    pub fn u_decompose(self) -> Result<(RingElem, RingElem)> {
        let sub = match self.ring {
            RingId::F2U => RingId::F2,
            RingId::F4U => RingId::F4,
            r => {
                return Err(Error::Domain(format!(
                    "u decomposition requires a chain ring, got {r}"
                )))
            }
        };
        let a = self.bits & (BIT_ONE | BIT_W);
        let b = (self.bits >> 1) & (BIT_ONE | BIT_W);
        Ok((RingElem { ring: sub, bits: a }, RingElem { ring: sub, bits: b }))
    }

    /// Shorthand token for this element (see module docs).
    pub fn token(self) -> String {
        match self.ring {
            RingId::F2 => if self.bits == 0 { "0" } else { "1" }.to_string(),
            RingId::F2U => match self.bits {
                0b00 => "0",
                0b01 => "1",
                0b10 => "u",
                _ => "3",
            }
            .to_string(),
            RingId::F4 => match self.bits {
                0b000 => "0",
                0b001 => "1",
                0b100 => "w",
                _ => "w+1",
            }
            .to_string(),
            RingId::F4U => format!("{:X}", self.bits),
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.token(), self.ring)
    }
}

fn parse_token(tok: &str, ring: RingId, pos: usize) -> Result<RingElem> {
    let err = |msg: String| Error::Parse { pos, msg };
    let bits = match ring {
        RingId::F2 => match tok {
            "0" => 0,
            "1" => BIT_ONE,
            _ => return Err(err(format!("invalid F2 token `{tok}`"))),
        },
        RingId::F2U => match tok {
            "0" => 0,
            "1" => BIT_ONE,
            "u" => BIT_U,
            "3" | "1+u" | "u+1" => BIT_ONE | BIT_U,
            _ => return Err(err(format!("invalid F2+uF2 token `{tok}`"))),
        },
        RingId::F4 => match tok {
            "0" => 0,
            "1" => BIT_ONE,
            "w" | "\u{3c9}" => BIT_W,
            "w+1" | "1+w" | "\u{3c9}+1" | "1+\u{3c9}" => BIT_ONE | BIT_W,
            _ => return Err(err(format!("invalid F4 token `{tok}`"))),
        },
        RingId::F4U => {
            if tok.len() != 1 {
                return Err(err(format!("invalid F4+uF4 hex token `{tok}`")));
            }
            let c = tok.chars().next().unwrap();
            c.to_digit(16).ok_or_else(|| err(format!("invalid hex digit `{c}`")))? as u8
        }
    };
    RingElem::new(ring, bits)
}

/// Parse a vector literal in the ring's shorthand.
///
/// Accepts comma- and/or whitespace-separated tokens, an optional pair of
/// surrounding parentheses, and (when no separator is present) a compact
/// digit string such as `1300u3`.
pub fn parse_vector(text: &str, ring: RingId) -> Result<Vec<RingElem>> {
    let mut s = text.trim();
    if s.starts_with('(') && s.ends_with(')') {
        s = &s[1..s.len() - 1];
    }
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty vector literal".into() });
    }
    if s.contains(',') || s.contains(char::is_whitespace) {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .enumerate()
            .map(|(pos, tok)| parse_token(tok, ring, pos))
            .collect()
    } else {
        s.chars()
            .enumerate()
            .map(|(pos, c)| parse_token(&c.to_string(), ring, pos))
            .collect()
    }
}

/// Emit a vector as comma-separated shorthand tokens; round-trips with
/// [`parse_vector`].
pub fn emit_vector(elems: &[RingElem]) -> String {
    elems.iter().map(|e| e.token()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(ring: RingId, bits: u8) -> RingElem {
        RingElem::new(ring, bits).unwrap()
    }

    /// Independent multiplication oracle: expand the product of the two
    /// polynomials in u and w monomial by monomial, reducing u^2 -> 0 and
    /// w^2 -> w + 1 on the fly.
    fn mul_oracle(a: u8, b: u8) -> u8 {
        // monomial (i, j) = u^i w^j with i, j in {0, 1}; slot = i + 2j.
        let mut out = 0u8;
        for sa in 0..4u8 {
            if a & (1 << sa) == 0 {
                continue;
            }
            for sb in 0..4u8 {
                if b & (1 << sb) == 0 {
                    continue;
                }
                let (ia, ja) = (sa & 1, sa >> 1);
                let (ib, jb) = (sb & 1, sb >> 1);
                if ia + ib >= 2 {
                    continue; // u^2 = 0
                }
                let i = ia + ib;
                match ja + jb {
                    0 => out ^= 1 << i,
                    1 => out ^= 1 << (i + 2),
                    2 => {
                        // w^2 = 1 + w
                        out ^= 1 << i;
                        out ^= 1 << (i + 2);
                    }
                    _ => unreachable!(),
                }
            }
        }
        out
    }

    #[test]
    fn mul_table_matches_polynomial_oracle() {
        for a in 0..16u8 {
            for b in 0..16u8 {
                assert_eq!(
                    MUL_TABLE[a as usize][b as usize],
                    mul_oracle(a, b),
                    "product {a:#06b} * {b:#06b}"
                );
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for ring in RingId::ALL {
            let elems: Vec<_> = ring.elements().collect();
            assert_eq!(elems.len(), ring.size());
            for &a in &elems {
                assert_eq!(a.checked_add(a).unwrap(), ring.zero(), "char 2: {a:?}");
                assert_eq!(a.checked_mul(ring.one()).unwrap(), a);
                for &b in &elems {
                    assert_eq!(a.checked_add(b).unwrap(), b.checked_add(a).unwrap());
                    assert_eq!(a.checked_mul(b).unwrap(), b.checked_mul(a).unwrap());
                    for &c in &elems {
                        let ab_c = a.checked_add(b).unwrap().checked_add(c).unwrap();
                        let a_bc = a.checked_add(b.checked_add(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let mul_assoc_l = a.checked_mul(b).unwrap().checked_mul(c).unwrap();
                        let mul_assoc_r = a.checked_mul(b.checked_mul(c).unwrap()).unwrap();
                        assert_eq!(mul_assoc_l, mul_assoc_r);
                        let dist_l = a.checked_mul(b.checked_add(c).unwrap()).unwrap();
                        let dist_r = a
                            .checked_mul(b)
                            .unwrap()
                            .checked_add(a.checked_mul(c).unwrap())
                            .unwrap();
                        assert_eq!(dist_l, dist_r);
                    }
                }
            }
        }
    }

    #[test]
    fn unit_square_lemma_in_f2_and_f2u() {
        for ring in [RingId::F2, RingId::F2U] {
            for a in ring.elements() {
                if a.is_unit() {
                    assert!(a.square().is_one(), "{a:?}^2");
                } else {
                    assert!(a.square().is_zero(), "{a:?}^2");
                }
            }
        }
    }

    #[test]
    fn unit_counts_by_exhaustion() {
        let counts: Vec<usize> = RingId::ALL
            .iter()
            .map(|r| r.elements().filter(|e| e.is_unit()).count())
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 12]);
    }

    #[test]
    fn is_unit_agrees_with_inverse_search() {
        for ring in RingId::ALL {
            for a in ring.elements() {
                assert_eq!(a.is_unit(), a.inverse().is_some(), "{a:?}");
                if let Some(inv) = a.inverse() {
                    assert!(a.checked_mul(inv).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn addition_examples() {
        // u + u = 0
        let u = RingElem::u_gen(RingId::F2U).unwrap();
        assert!(u.checked_add(u).unwrap().is_zero());
        // 1 + u = 3
        let one = RingId::F2U.one();
        assert_eq!(one.checked_add(u).unwrap().token(), "3");
        // hex 9 + hex C = hex 5
        let a = e(RingId::F4U, 0x9);
        let b = e(RingId::F4U, 0xC);
        assert_eq!(a.checked_add(b).unwrap().bits(), 0x5);
    }

    #[test]
    fn multiplication_examples() {
        let u = RingElem::u_gen(RingId::F2U).unwrap();
        assert!(u.checked_mul(u).unwrap().is_zero());

        let w = RingElem::omega(RingId::F4).unwrap();
        assert_eq!(w.checked_mul(w).unwrap(), RingElem::omega_bar(RingId::F4).unwrap());

        // (w + u)^2 in F4+uF4, frozen from the polynomial oracle.
        let x = e(RingId::F4U, 0x6);
        assert_eq!(mul_oracle(0x6, 0x6), 0x5);
        assert_eq!(x.square().bits(), 0x5);
    }

    #[test]
    fn unit_examples() {
        assert!(!RingElem::u_gen(RingId::F2U).unwrap().is_unit());
        assert!(e(RingId::F2U, 0b0011).is_unit()); // 1+u, self-inverse
        assert!(e(RingId::F2U, 0b0011).square().is_one());
        assert!(!e(RingId::F4U, 0x8).is_unit()); // uw is nilpotent
        assert!(e(RingId::F4U, 0x8).square().is_zero());
    }

    #[test]
    fn shorthand_examples() {
        let v = parse_vector("9", RingId::F4U).unwrap();
        assert_eq!(v[0].bits(), 0b1001); // 1 + uw
        let v = parse_vector("C", RingId::F4U).unwrap();
        assert_eq!(v[0].bits(), 0b1100); // w + uw
        let v = parse_vector("1300u3", RingId::F2U).unwrap();
        let toks: Vec<String> = v.iter().map(|e| e.token()).collect();
        assert_eq!(toks, vec!["1", "3", "0", "0", "u", "3"]);
    }

    #[test]
    fn parse_accepts_commas_whitespace_and_parens() {
        let a = parse_vector("(1, 3 0,0 u,3)", RingId::F2U).unwrap();
        let b = parse_vector("1300u3", RingId::F2U).unwrap();
        assert_eq!(a, b);
        let c = parse_vector("0,1,w+1", RingId::F4).unwrap();
        assert_eq!(c[2], RingElem::omega_bar(RingId::F4).unwrap());
    }

    #[test]
    fn parse_emit_round_trip_all_elements() {
        for ring in RingId::ALL {
            let elems: Vec<_> = ring.elements().collect();
            let text = emit_vector(&elems);
            assert_eq!(parse_vector(&text, ring).unwrap(), elems);
        }
        // compact form round-trips where every token is one character
        for ring in [RingId::F2, RingId::F2U, RingId::F4U] {
            let elems: Vec<_> = ring.elements().collect();
            let compact: String = elems.iter().map(|e| e.token()).collect();
            assert_eq!(parse_vector(&compact, ring).unwrap(), elems);
        }
    }

    #[test]
    fn parse_rejects_bad_tokens_with_position() {
        match parse_vector("1,x,0", RingId::F2U) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_vector("w", RingId::F2U).is_err());
        assert!(parse_vector("5", RingId::F4).is_err());
    }

    #[test]
    fn omega_decompose_reconstructs() {
        for ring in [RingId::F4, RingId::F4U] {
            let w = RingElem::omega(ring).unwrap();
            let wbar = RingElem::omega_bar(ring).unwrap();
            for x in ring.elements() {
                let (a, b) = x.omega_decompose().unwrap();
                let back = a
                    .lift_to(ring)
                    .unwrap()
                    .checked_mul(w)
                    .unwrap()
                    .checked_add(b.lift_to(ring).unwrap().checked_mul(wbar).unwrap())
                    .unwrap();
                assert_eq!(back, x, "a*w + b*w_bar for {x:?}");
            }
        }
        // w itself maps to (1, 0)
        let (a, b) = RingElem::omega(RingId::F4).unwrap().omega_decompose().unwrap();
        assert!(a.is_one() && b.is_zero());
        // 1 = w + w_bar maps to (1, 1)
        let (a, b) = RingId::F4.one().omega_decompose().unwrap();
        assert!(a.is_one() && b.is_one());
    }

    #[test]
    fn ring_mismatch_is_a_domain_error() {
        let a = RingId::F2.one();
        let b = RingId::F2U.one();
        assert!(matches!(a.checked_add(b), Err(Error::RingMismatch(_, _))));
        assert!(matches!(a.checked_mul(b), Err(Error::RingMismatch(_, _))));
    }

    #[test]
    fn ring_id_parsing() {
        assert_eq!("F2+uF2".parse::<RingId>().unwrap(), RingId::F2U);
        assert_eq!("f4u".parse::<RingId>().unwrap(), RingId::F4U);
        assert_eq!("F2".parse::<RingId>().unwrap(), RingId::F2);
        assert!("F8".parse::<RingId>().is_err());
    }
}
