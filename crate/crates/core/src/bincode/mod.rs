//! Bit-packed binary linear code engine: reduction, duality checks, exact
//! minimum weight, exact low-weight coefficient counts and weight-enumerator
//! classification.
//!
//! The counting strategy for self-dual codes uses the two disjoint
//! information sets of the standard form `[I | A]` and the dual-side
//! generator `[A^T | I]`: a codeword of weight w restricted to the two
//! halves has weights summing to w, so every codeword of weight at most
//! 2r+1 carries at most r ones on one of the two sets. Enumerating
//! messages of weight at most r through both generators therefore yields
//! exact counts A_w for all w <= 2r+1 by inclusion-exclusion:
//! `A_w = N1 + N2 - N12` where N1, N2 count codewords of weight w with at
//! most floor(w/2) ones on the respective set and N12 counts those tight
//! on both.

mod bitmatrix;
mod enumerate;

pub use bitmatrix::{dot_parity, pack_bits, BitMatrix};
pub use enumerate::{full_weight_histogram, message_weight_table, MessageWeightTable};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};

/// Dimension bound below which exact answers come from full 2^k
/// enumeration instead of the two-set method.
pub const FULL_ENUM_MAX_K: usize = 20;

/// Default ceiling on the weight accepted by [`BinaryCode::count_weight`].
pub const DEFAULT_COUNT_CEILING: usize = 16;

/// A binary linear code held as a reduced generator matrix, with the
/// standard form, its column permutation and the dual-side generator
/// cached at construction.
#[derive(Clone, Debug)]
pub struct BinaryCode {
    n: usize,
    k: usize,
    gen: BitMatrix,
    standard: BitMatrix,
    perm: Vec<usize>,
    dual: BitMatrix,
    self_dual: bool,
}

impl BinaryCode {
    /// Build from any spanning set of rows; the generator is row-reduced
    /// and zero rows are dropped.
    pub fn from_generator(mut gen: BitMatrix) -> Result<Self> {
        let n = gen.cols();
        let (rank, pivots) = gen.rref();
        if rank == 0 {
            return Err(Error::RankDeficient { rank: 0, rows: gen.rows() });
        }
        gen.truncate_zero_rows();
        let k = rank;

        // standard form: pivot columns first (in order), then the rest
        let mut perm = pivots.clone();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        perm.extend((0..n).filter(|&c| !is_pivot[c]));
        let standard = gen.permute_cols(&perm);

        // dual-side generator [A^T | I_{n-k}] in the permuted coordinates
        let mut dual = BitMatrix::zero(n - k, n);
        for r in 0..n - k {
            for c in 0..k {
                if standard.get(c, k + r) {
                    dual.set(r, c, true);
                }
            }
            dual.set(r, k + r, true);
        }

        let self_dual = 2 * k == n
            && (0..k).all(|i| (i..k).all(|j| gen.rows_orthogonal(i, j)));

        Ok(BinaryCode { n, k, gen, standard, perm, dual, self_dual })
    }

    pub fn from_packed_rows(cols: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        Self::from_generator(BitMatrix::from_packed_rows(cols, rows))
    }

    pub fn from_01_rows(rows: &[&str]) -> Result<Self> {
        Self::from_generator(BitMatrix::from_01_rows(rows)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Reduced generator in the original coordinate order.
    pub fn generator(&self) -> &BitMatrix {
        &self.gen
    }

    /// Standard form `[I | A]` together with its column permutation:
    /// standard-form column j is original column `perm[j]`.
    pub fn standard_form(&self) -> (&BitMatrix, &[usize]) {
        (&self.standard, &self.perm)
    }

    /// Generator `[A^T | I]` of the dual code, in the standard-form
    /// coordinates; for a self-dual code it generates the same code.
    pub fn dual_generator(&self) -> &BitMatrix {
        &self.dual
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual
    }

    /// Type II: self-dual with every generator row weight divisible by 4
    /// (pairwise orthogonal doubly-even rows generate a doubly-even code).
    pub fn is_type_ii(&self) -> bool {
        self.self_dual && (0..self.k).all(|r| self.gen.row_weight(r) % 4 == 0)
    }

    /// Membership test against the reduced generator.
    pub fn contains(&self, word: &[u64]) -> bool {
        let mut w = word.to_vec();
        for r in 0..self.k {
            // pivot of row r is the leftmost set bit of that row
            let row = self.gen.row(r);
            let pivot = row
                .iter()
                .enumerate()
                .find_map(|(i, &x)| (x != 0).then(|| i * 64 + x.trailing_zeros() as usize))
                .expect("generator has no zero rows");
            if w[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (a, b) in w.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn contains_all_ones(&self) -> bool {
        let mut ones = vec![u64::MAX; self.gen.words_per_row()];
        let extra = self.gen.words_per_row() * 64 - self.n;
        if extra > 0 {
            *ones.last_mut().unwrap() = u64::MAX >> extra;
        }
        self.contains(&ones)
    }

    /// Exact counts A_w for every w <= 2r+1, via the two-information-set
    /// method. Requires self-duality (the two sets partition the support).
    pub fn two_set_counts(&self, r: usize) -> Result<WeightCounts> {
        if !self.self_dual {
            return Err(Error::Domain(
                "two-information-set counting requires a self-dual code".into(),
            ));
        }
        let t1 = message_weight_table(&self.standard, r);
        let t2 = message_weight_table(&self.dual, r);
        let exact_upto = (2 * r + 1).min(self.n);
        let mut counts = vec![0u64; exact_upto + 1];
        counts[0] = 1;
        for w in 1..=exact_upto {
            let half = w / 2;
            let n1 = t1.count_upto(half, w);
            let n2 = t2.count_upto(half, w);
            // both halves at most floor(w/2): forces an even split, so only
            // the m = w/2 stratum of either table can be double-counted
            let n12 = if w % 2 == 0 { t1.count(half, w) } else { 0 };
            counts[w] = n1 + n2 - n12;
        }
        Ok(WeightCounts { n: self.n, exact_upto, counts })
    }

    /// Exact counts A_w for every w <= r from a single information set
    /// (message weight never exceeds codeword weight).
    pub fn single_set_counts(&self, r: usize) -> WeightCounts {
        let t = message_weight_table(&self.standard, r);
        let exact_upto = r.min(self.n);
        let mut counts = vec![0u64; exact_upto + 1];
        counts[0] = 1;
        for w in 1..=exact_upto {
            counts[w] = t.count_upto(r, w);
        }
        WeightCounts { n: self.n, exact_upto, counts }
    }

    /// Exact counts for the whole weight range by 2^k enumeration.
    pub fn full_counts(&self) -> Result<WeightCounts> {
        if self.k > FULL_ENUM_MAX_K {
            return Err(Error::Domain(format!(
                "full enumeration limited to k <= {FULL_ENUM_MAX_K}, code has k = {}",
                self.k
            )));
        }
        let counts = full_weight_histogram(&self.gen);
        Ok(WeightCounts { n: self.n, exact_upto: self.n, counts })
    }

    /// Exact minimum nonzero weight.
    ///
    /// Self-dual codes use the two-set method, doubling the radius until
    /// the best weight seen is certified (all codewords of weight at most
    /// 2r+1 have been enumerated). Other codes fall back to full
    /// enumeration when small enough, else to the single-set bound.
    pub fn min_weight(&self) -> usize {
        if self.k <= FULL_ENUM_MAX_K {
            let hist = self.full_counts().expect("k within full-enumeration cap");
            return hist.min_nonzero().expect("nonzero code");
        }
        if self.self_dual {
            for r in 1..=self.k {
                let counts = self.two_set_counts(r).expect("self-dual");
                if let Some(d) = counts.min_nonzero() {
                    if d <= 2 * r + 1 {
                        return d;
                    }
                }
            }
            unreachable!("minimum weight certified by r = k at the latest");
        }
        // single information set: all codewords of weight <= r enumerated
        for r in 1..=self.k {
            let counts = self.single_set_counts(r);
            if let Some(d) = counts.min_nonzero() {
                if d <= r {
                    return d;
                }
            }
        }
        unreachable!("single-set enumeration at r = k is exhaustive");
    }

    /// Exact A_w. Refuses weights above the ceiling with a cost estimate.
    pub fn count_weight(&self, w: usize, ceiling: Option<usize>) -> Result<u64> {
        let ceiling = ceiling.unwrap_or(DEFAULT_COUNT_CEILING);
        if w > ceiling {
            let r = w / 2;
            let estimate: u128 = (1..=r).map(|i| binomial(self.k, i)).sum::<u128>() * 2;
            return Err(Error::CountCeiling { w, ceiling, estimate });
        }
        if w == 0 {
            return Ok(1);
        }
        if self.k <= FULL_ENUM_MAX_K {
            return Ok(self.full_counts()?.get(w));
        }
        if !self.self_dual {
            return Err(Error::Domain(
                "exact counting beyond full enumeration requires a self-dual code".into(),
            ));
        }
        Ok(self.two_set_counts(w / 2)?.get(w))
    }

    /// Serialize as `n k` header plus k rows of 0/1 characters.
    pub fn save<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.n, self.k)?;
        for r in 0..self.k {
            writeln!(out, "{}", self.gen.row_string(r))?;
        }
        Ok(())
    }

    pub fn load<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse { pos: 0, msg: "missing header".into() })??;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse { pos: 0, msg: "bad header".into() })?;
        let k: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse { pos: 0, msg: "bad header".into() })?;
        let mut rows = Vec::with_capacity(k);
        for line in lines.take(k) {
            rows.push(line?);
        }
        if rows.len() != k {
            return Err(Error::Parse { pos: 0, msg: format!("expected {k} rows") });
        }
        let refs: Vec<&str> = rows.iter().map(|s| s.as_str()).collect();
        let m = BitMatrix::from_01_rows(&refs)?;
        if m.cols() != n {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("header says n = {n}, rows have length {}", m.cols()),
            });
        }
        Self::from_generator(m)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

/// Exact weight counts over a certified range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCounts {
    n: usize,
    exact_upto: usize,
    counts: Vec<u64>,
}

impl WeightCounts {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest weight for which the counts are exact.
    pub fn exact_upto(&self) -> usize {
        self.exact_upto
    }

    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn min_nonzero(&self) -> Option<usize> {
        (1..=self.exact_upto).find(|&w| self.counts[w] != 0)
    }
}

/// Weight-enumerator family labels for the parameterized extremal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    W56_1,
    W56_2,
    W64_1,
    W64_2,
    W68_1,
    W68_2,
    W80_2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::W56_1 => "W56,1",
            Family::W56_2 => "W56,2",
            Family::W64_1 => "W64,1",
            Family::W64_2 => "W64,2",
            Family::W68_1 => "W68,1",
            Family::W68_2 => "W68,2",
            Family::W80_2 => "W80,2",
        };
        f.write_str(s)
    }
}

/// Identified family plus its enumerator parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<i64>,
}

/// Computed weight data of one code: exact counts over the certified
/// range plus the family classification when the length admits one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub n: usize,
    pub d: usize,
    /// Exact A_w for even w up to the certified range (odd weights are
    /// absent: self-dual codes have none).
    pub counts: BTreeMap<usize, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyParams>,
}

impl WeightProfile {
    pub fn count(&self, w: usize) -> Option<u64> {
        if w == 0 {
            return Some(1);
        }
        self.counts.get(&w).copied()
    }
}

/// Minimum-distance bound for binary self-dual codes of length n:
/// 4*floor(n/24) + 4, except Type I lengths congruent to 22 mod 24 where
/// the additive term is 6.
pub fn rains_bound(n: usize, type_ii: bool) -> usize {
    let base = 4 * (n / 24) + 4;
    if !type_ii && n % 24 == 22 {
        base + 2
    } else {
        base
    }
}

/// True if the code parameters meet the bound exactly.
pub fn is_extremal(n: usize, type_ii: bool, d: usize) -> bool {
    d == rains_bound(n, type_ii)
}

fn family_radius(n: usize) -> Option<usize> {
    match n {
        56 => Some(6), // A_10, A_12
        64 | 68 => Some(7), // A_12, A_14
        80 => Some(8), // A_14, A_16
        _ => None,
    }
}

fn exact_div(num: i64, den: i64, what: &str, n: usize, d: usize) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::UnknownEnumerator {
            n,
            d,
            detail: format!("{what} = {num}/{den} is not an integer"),
        });
    }
    Ok(num / den)
}

/// Invert the enumerator formulas for the supported lengths.
///
/// Returns `Ok(None)` when the length has no parameterized family or the
/// code is Type II at length 64 (those forms target Type I codes); fails
/// loudly when counts sit outside every known family.
fn classify_family(n: usize, d: usize, type_ii: bool, counts: &WeightCounts) -> Result<Option<FamilyParams>> {
    let a = |w: usize| counts.get(w) as i64;
    match (n, d) {
        (56, 10) => {
            let alpha = exact_div(a(10) - 308, 4, "alpha", n, d)?;
            let family = if a(12) == 4246 - 8 * alpha {
                Family::W56_1
            } else if a(12) == 3990 - 8 * alpha {
                Family::W56_2
            } else {
                return Err(Error::UnknownEnumerator {
                    n,
                    d,
                    detail: format!("A10 = {}, A12 = {} match neither length-56 form", a(10), a(12)),
                });
            };
            Ok(Some(FamilyParams { family, alpha: Some(alpha), beta: None, gamma: None }))
        }
        (64, 12) => {
            if type_ii {
                return Ok(None);
            }
            let beta = exact_div(a(12) - 1312, 16, "beta", n, d)?;
            let family = if a(14) == 22016 - 64 * beta {
                Family::W64_1
            } else if a(14) == 23040 - 64 * beta {
                Family::W64_2
            } else {
                return Err(Error::UnknownEnumerator {
                    n,
                    d,
                    detail: format!("A12 = {}, A14 = {} match neither length-64 form", a(12), a(14)),
                });
            };
            Ok(Some(FamilyParams { family, alpha: None, beta: Some(beta), gamma: None }))
        }
        (68, 12) => {
            let beta = exact_div(a(12) - 442, 4, "beta", n, d)?;
            if a(14) == 10864 - 8 * beta {
                return Ok(Some(FamilyParams {
                    family: Family::W68_1,
                    alpha: None,
                    beta: Some(beta),
                    gamma: None,
                }));
            }
            let gamma = exact_div(14960 - 8 * beta - a(14), 256, "gamma", n, d)?;
            if !(0..=9).contains(&gamma) {
                return Err(Error::UnknownEnumerator {
                    n,
                    d,
                    detail: format!("gamma = {gamma} outside 0..=9 (A12 = {}, A14 = {})", a(12), a(14)),
                });
            }
            Ok(Some(FamilyParams {
                family: Family::W68_2,
                alpha: None,
                beta: Some(beta),
                gamma: Some(gamma),
            }))
        }
        (80, 14) => {
            let alpha = exact_div(a(14) - 3200, 4, "alpha", n, d)?;
            let beta = exact_div(a(16) - 47645 + 8 * alpha, 256, "beta", n, d)?;
            Ok(Some(FamilyParams {
                family: Family::W80_2,
                alpha: Some(alpha),
                beta: Some(beta),
                gamma: None,
            }))
        }
        _ => Ok(None),
    }
}

/// Compute the weight profile of a self-dual code: exact counts over the
/// range the classification needs, the exact minimum weight, and the
/// family parameters when the length has parameterized forms.
pub fn classify(code: &BinaryCode) -> Result<WeightProfile> {
    if !code.is_self_dual() {
        return Err(Error::Domain("classification requires a self-dual code".into()));
    }
    let counts = if code.k() <= FULL_ENUM_MAX_K {
        code.full_counts()?
    } else {
        let mut r = family_radius(code.n()).unwrap_or(2);
        loop {
            let c = code.two_set_counts(r)?;
            match c.min_nonzero() {
                Some(d) if d <= 2 * r + 1 => break c,
                _ => r += 1,
            }
        }
    };
    let d = counts.min_nonzero().ok_or_else(|| Error::Domain("zero code".into()))?;
    let type_ii = code.is_type_ii();
    let family = classify_family(code.n(), d, type_ii, &counts)?;
    let mut map = BTreeMap::new();
    for w in (2..=counts.exact_upto()).step_by(2) {
        map.insert(w, counts.get(w));
    }
    Ok(WeightProfile { n: code.n(), d, counts: map, family })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming8() -> BinaryCode {
        BinaryCode::from_01_rows(&["10000111", "01001011", "00101101", "00011110"]).unwrap()
    }

    #[test]
    fn extended_hamming_is_self_dual_type_ii() {
        let c = hamming8();
        assert_eq!((c.n(), c.k()), (8, 4));
        assert!(c.is_self_dual());
        assert!(c.is_type_ii());
        assert_eq!(c.min_weight(), 4);
        assert_eq!(c.count_weight(4, None).unwrap(), 14);
        assert_eq!(c.count_weight(0, None).unwrap(), 1);
        assert!(c.contains_all_ones());
    }

    #[test]
    fn standard_form_of_standard_input_is_identity_permutation() {
        let c = hamming8();
        let (sf, perm) = c.standard_form();
        assert_eq!(perm, (0..8).collect::<Vec<_>>());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(sf.get(i, j), i == j);
            }
        }
    }

    #[test]
    fn column_swapped_input_recovers_standard_form() {
        // swap columns so the leading block is no longer the identity
        let rows = ["00011110", "10010111", "01011011", "00111101"];
        let c = BinaryCode::from_01_rows(&rows).unwrap();
        assert_eq!(c.k(), 4);
        let (sf, perm) = c.standard_form();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(sf.get(i, j), i == j, "pivot block");
            }
        }
        // permutation maps standard columns back onto original ones
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn dual_generator_generates_the_same_self_dual_code() {
        let c = hamming8();
        let (sf, _) = c.standard_form();
        let dual = c.dual_generator();
        // same row space: stack and check rank stays k
        let mut all: Vec<Vec<u64>> = (0..4).map(|r| sf.row_vec(r)).collect();
        all.extend((0..4).map(|r| dual.row_vec(r)));
        let stacked = BitMatrix::from_packed_rows(8, all);
        assert_eq!(stacked.rank(), 4);
    }

    #[test]
    fn membership_test() {
        let c = hamming8();
        let row0 = c.generator().row_vec(0);
        assert!(c.contains(&row0));
        let mut not_in = row0.clone();
        not_in[0] ^= 1;
        assert!(!c.contains(&not_in));
    }

    #[test]
    fn two_set_counts_match_full_enumeration() {
        // self-dual [16,8] direct sum of two extended Hamming codes
        let rows = [
            "1000011100000000",
            "0100101100000000",
            "0010110100000000",
            "0001111000000000",
            "0000000010000111",
            "0000000001001011",
            "0000000000101101",
            "0000000000011110",
        ];
        let c = BinaryCode::from_01_rows(&rows).unwrap();
        assert!(c.is_self_dual());
        let full = c.full_counts().unwrap();
        for r in 1..=4 {
            let two = c.two_set_counts(r).unwrap();
            for w in 0..=two.exact_upto() {
                assert_eq!(two.get(w), full.get(w), "r = {r}, w = {w}");
            }
        }
        let single = c.single_set_counts(5);
        for w in 0..=5 {
            assert_eq!(single.get(w), full.get(w), "single set w = {w}");
        }
    }

    #[test]
    fn count_ceiling_is_enforced() {
        let c = hamming8();
        match c.count_weight(18, Some(16)) {
            Err(Error::CountCeiling { w: 18, ceiling: 16, estimate }) => {
                assert!(estimate > 0);
            }
            other => panic!("expected ceiling refusal, got {other:?}"),
        }
    }

    #[test]
    fn rains_bound_values() {
        assert_eq!(rains_bound(64, true), 12);
        assert_eq!(rains_bound(68, false), 12);
        assert_eq!(rains_bound(46, false), 10);
        assert_eq!(rains_bound(32, true), 8);
        assert_eq!(rains_bound(40, false), 8);
        assert_eq!(rains_bound(56, false), 12);
        assert_eq!(rains_bound(80, false), 16);
        assert!(is_extremal(32, true, 8));
        assert!(!is_extremal(80, false, 14)); // best known, not extremal
    }

    #[test]
    fn classification_round_trips_the_formulas() {
        // fabricate counts and confirm the inversion reproduces them
        for (beta, family) in [(13i64, Family::W64_2), (44, Family::W64_1)] {
            let a12 = (1312 + 16 * beta) as u64;
            let a14 = match family {
                Family::W64_1 => (22016 - 64 * beta) as u64,
                _ => (23040 - 64 * beta) as u64,
            };
            let mut counts = vec![0u64; 16];
            counts[0] = 1;
            counts[12] = a12;
            counts[14] = a14;
            let wc = WeightCounts { n: 64, exact_upto: 15, counts };
            let fp = classify_family(64, 12, false, &wc).unwrap().unwrap();
            assert_eq!(fp.family, family);
            assert_eq!(fp.beta, Some(beta));
            // re-evaluate the closed forms from the inverted parameters
            assert_eq!(wc.get(12) as i64, 1312 + 16 * fp.beta.unwrap());
        }
        // length 68 with gamma
        let (gamma, beta) = (4i64, 190i64);
        let mut counts = vec![0u64; 16];
        counts[0] = 1;
        counts[12] = (442 + 4 * beta) as u64;
        counts[14] = (14960 - 8 * beta - 256 * gamma) as u64;
        let wc = WeightCounts { n: 68, exact_upto: 15, counts };
        let fp = classify_family(68, 12, false, &wc).unwrap().unwrap();
        assert_eq!(fp.family, Family::W68_2);
        assert_eq!((fp.gamma, fp.beta), (Some(gamma), Some(beta)));
        // length 80
        let (alpha, beta) = (-330i64, 10i64);
        let mut counts = vec![0u64; 18];
        counts[0] = 1;
        counts[14] = (3200 + 4 * alpha) as u64;
        counts[16] = (47645 - 8 * alpha + 256 * beta) as u64;
        let wc = WeightCounts { n: 80, exact_upto: 17, counts };
        let fp = classify_family(80, 14, false, &wc).unwrap().unwrap();
        assert_eq!((fp.alpha, fp.beta), (Some(alpha), Some(beta)));
        assert_eq!(wc.get(14), 1880);
        // length 56
        let alpha = -51i64;
        let mut counts = vec![0u64; 14];
        counts[0] = 1;
        counts[10] = (308 + 4 * alpha) as u64;
        counts[12] = (4246 - 8 * alpha) as u64;
        let wc = WeightCounts { n: 56, exact_upto: 13, counts };
        let fp = classify_family(56, 10, false, &wc).unwrap().unwrap();
        assert_eq!(fp.family, Family::W56_1);
        assert_eq!(fp.alpha, Some(alpha));
        assert_eq!(wc.get(10), 104);
    }

    #[test]
    fn classification_failures_are_loud() {
        // non-integral beta
        let mut counts = vec![0u64; 16];
        counts[0] = 1;
        counts[12] = 1313;
        let wc = WeightCounts { n: 64, exact_upto: 15, counts };
        assert!(matches!(
            classify_family(64, 12, false, &wc),
            Err(Error::UnknownEnumerator { .. })
        ));
        // counts matching no family
        let mut counts = vec![0u64; 16];
        counts[0] = 1;
        counts[12] = 1312 + 16;
        counts[14] = 12345;
        let wc = WeightCounts { n: 64, exact_upto: 15, counts };
        assert!(matches!(
            classify_family(64, 12, false, &wc),
            Err(Error::UnknownEnumerator { .. })
        ));
    }

    #[test]
    fn classify_small_self_dual_code() {
        let profile = classify(&hamming8()).unwrap();
        assert_eq!(profile.d, 4);
        assert_eq!(profile.count(4), Some(14));
        assert_eq!(profile.count(8), Some(1));
        assert!(profile.family.is_none());
    }

    #[test]
    fn save_load_round_trip() {
        let c = hamming8();
        let mut buf = Vec::new();
        c.save(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("8 4\n"));
        let c2 = BinaryCode::load(&buf[..]).unwrap();
        assert_eq!(c2.generator(), c.generator());
    }

    #[test]
    fn weight_symmetry_when_all_ones_present() {
        let c = hamming8();
        let full = c.full_counts().unwrap();
        assert!(c.contains_all_ones());
        for w in 0..=8 {
            assert_eq!(full.get(w), full.get(8 - w), "A_w = A_(n-w)");
        }
    }
}
