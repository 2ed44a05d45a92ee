//! Dense bit-packed matrix over F2: rows are arrays of 64-bit words,
//! weights via population count.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row_string(r))?;
        }
        write!(f, "]")
    }
}

pub(crate) fn words_for(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

/// Parity of the AND of two packed rows (the F2 inner product).
pub fn dot_parity(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).fold(0u32, |acc, (&x, &y)| acc ^ (x & y).count_ones()) & 1 == 1
}

pub(crate) fn weight(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        BitMatrix { rows, cols, wpr, data: vec![0; rows * wpr] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Build from packed rows; every row must already be `words_for(cols)`
    /// words long with no bits beyond `cols`.
    pub fn from_packed_rows(cols: usize, rows: Vec<Vec<u64>>) -> Self {
        let wpr = words_for(cols);
        let mut data = Vec::with_capacity(rows.len() * wpr);
        let nrows = rows.len();
        for r in rows {
            debug_assert_eq!(r.len(), wpr);
            data.extend_from_slice(&r);
        }
        BitMatrix { rows: nrows, cols, wpr, data }
    }

    /// Parse rows of '0'/'1' characters.
    pub fn from_01_rows(rows: &[&str]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::UnsupportedShape("no rows".into()));
        }
        let cols = rows[0].len();
        let mut m = Self::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::UnsupportedShape("ragged rows".into()));
            }
            for (j, c) in row.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => {
                        return Err(Error::Parse {
                            pos: j,
                            msg: format!("invalid bit character `{c}` in row {i}"),
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn words_per_row(&self) -> usize {
        self.wpr
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.wpr + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.wpr + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    pub fn row_vec(&self, r: usize) -> Vec<u64> {
        self.row(r).to_vec()
    }

    pub fn row_string(&self, r: usize) -> String {
        (0..self.cols).map(|c| if self.get(r, c) { '1' } else { '0' }).collect()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        weight(self.row(r))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (lo, hi) = self.data.split_at_mut(b * self.wpr);
        lo[a * self.wpr..(a + 1) * self.wpr].swap_with_slice(&mut hi[..self.wpr]);
    }

    /// XOR row `src` into row `dst`.
    pub fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let (s, d) = (src * self.wpr, dst * self.wpr);
        for w in 0..self.wpr {
            let v = self.data[s + w];
            self.data[d + w] ^= v;
        }
    }

    pub fn rows_orthogonal(&self, a: usize, b: usize) -> bool {
        !dot_parity(self.row(a), self.row(b))
    }

    /// Row-reduce in place to reduced echelon form with leftmost pivots.
    /// Returns the rank and the pivot columns in order.
    pub fn rref(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(rank, p);
            for r in 0..self.rows {
                if r != rank && self.get(r, col) {
                    self.xor_rows(r, rank);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().0
    }

    /// Drop all-zero rows (used after reduction).
    pub fn truncate_zero_rows(&mut self) {
        let nz = (0..self.rows).take_while(|&r| self.row(r).iter().any(|&w| w != 0)).count();
        self.rows = nz;
        self.data.truncate(nz * self.wpr);
    }

    /// New matrix whose column j is column `perm[j]` of `self`.
    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.cols);
        let mut m = Self::zero(self.rows, self.cols);
        for r in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                if self.get(r, src) {
                    m.set(r, j, true);
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    m.set(c, r, true);
                }
            }
        }
        m
    }
}

/// Pack a bool slice into row words.
pub fn pack_bits(bits: &[bool]) -> Vec<u64> {
    let mut out = vec![0u64; words_for(bits.len())];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_of_identity_is_identity() {
        let mut m = BitMatrix::identity(5);
        let (rank, pivots) = m.rref();
        assert_eq!(rank, 5);
        assert_eq!(pivots, vec![0, 1, 2, 3, 4]);
        assert_eq!(m, BitMatrix::identity(5));
    }

    #[test]
    fn duplicated_rows_cost_exactly_their_count() {
        let mut m = BitMatrix::from_01_rows(&["1010", "0110", "1010", "0110", "1010"]).unwrap();
        let (rank, _) = m.rref();
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_is_idempotent_on_random_input() {
        let mut state = 0xD1B54A32D192ED03u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..20 {
            let rows: Vec<Vec<u64>> = (0..16).map(|_| vec![next() & 0xFFFF_FFFF]).collect();
            let mut m = BitMatrix::from_packed_rows(32, rows);
            let (r1, p1) = m.rref();
            let m1 = m.clone();
            let (r2, p2) = m.rref();
            assert_eq!((r1, p1), (r2, p2));
            assert_eq!(m, m1);
        }
    }

    #[test]
    fn dot_parity_and_weights() {
        let m = BitMatrix::from_01_rows(&["1100", "0110"]).unwrap();
        assert!(!m.rows_orthogonal(0, 1)); // overlap of size 1
        assert_eq!(m.row_weight(0), 2);
        let m = BitMatrix::from_01_rows(&["1111", "0110"]).unwrap();
        assert!(m.rows_orthogonal(0, 1));
    }

    #[test]
    fn permute_and_transpose() {
        let m = BitMatrix::from_01_rows(&["100", "010"]).unwrap();
        let p = m.permute_cols(&[2, 0, 1]);
        assert_eq!(p.row_string(0), "010");
        assert_eq!(p.row_string(1), "001");
        let t = m.transpose();
        assert_eq!(t.rows(), 3);
        assert!(t.get(0, 0) && t.get(1, 1));
    }

    #[test]
    fn pack_round_trip() {
        let bits: Vec<bool> = (0..70).map(|i| i % 3 == 0).collect();
        let packed = pack_bits(&bits);
        for (i, &b) in bits.iter().enumerate() {
            assert_eq!(packed[i / 64] >> (i % 64) & 1 == 1, b);
        }
    }
}
