//! Low-weight codeword enumeration over a bit-packed generator.
//!
//! Codewords are generated by XOR-accumulating generator rows along a
//! depth-first walk of the row subsets of size at most r: each step XORs
//! one row in (descending) or back out (returning), so a step costs one
//! row XOR plus a population count. The walk is partitioned by its leading
//! row index and the partitions run in parallel; every worker owns a
//! private count table and the tables merge by integer addition, so the
//! result is identical for any worker count.

use super::bitmatrix::BitMatrix;
use rayon::prelude::*;

/// Exact counts `cnt[m][w]` of codewords built from exactly m generator
/// rows (1 <= m <= r) having Hamming weight w.
#[derive(Clone, Debug)]
pub struct MessageWeightTable {
    pub r: usize,
    pub n: usize,
    cnt: Vec<u64>, // (r+1) x (n+1), row-major on m
}

impl MessageWeightTable {
    fn zero(r: usize, n: usize) -> Self {
        MessageWeightTable { r, n, cnt: vec![0; (r + 1) * (n + 1)] }
    }

    #[inline]
    fn bump(&mut self, m: usize, w: usize) {
        self.cnt[m * (self.n + 1) + w] += 1;
    }

    fn merge(mut self, other: Self) -> Self {
        debug_assert_eq!(self.cnt.len(), other.cnt.len());
        for (a, b) in self.cnt.iter_mut().zip(&other.cnt) {
            *a += b;
        }
        self
    }

    #[inline]
    pub fn count(&self, m: usize, w: usize) -> u64 {
        self.cnt[m * (self.n + 1) + w]
    }

    /// Codewords of weight w reachable from at most `m_max` rows.
    pub fn count_upto(&self, m_max: usize, w: usize) -> u64 {
        (1..=m_max.min(self.r)).map(|m| self.count(m, w)).sum()
    }

    /// Smallest nonzero codeword weight seen anywhere in the table.
    pub fn min_seen_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&w| (1..=self.r).any(|m| self.count(m, w) != 0))
    }
}

const MAX_WORDS: usize = 4; // supports n <= 256

fn dfs<const W: usize>(
    rows: &[[u64; W]],
    start: usize,
    depth: usize,
    acc: [u64; W],
    table: &mut MessageWeightTable,
) {
    for i in start..rows.len() {
        let mut next = acc;
        for t in 0..W {
            next[t] ^= rows[i][t];
        }
        let w: u32 = next.iter().map(|x| x.count_ones()).sum();
        table.bump(depth, w as usize);
        if depth < table.r {
            dfs(rows, i + 1, depth + 1, next, table);
        }
    }
}

fn packed_rows<const W: usize>(gen: &BitMatrix) -> Vec<[u64; W]> {
    (0..gen.rows())
        .map(|r| {
            let mut row = [0u64; W];
            row[..gen.words_per_row()].copy_from_slice(gen.row(r));
            row
        })
        .collect()
}

fn scan<const W: usize>(gen: &BitMatrix, r: usize) -> MessageWeightTable {
    let rows = packed_rows::<W>(gen);
    let n = gen.cols();
    (0..rows.len())
        .into_par_iter()
        .map(|lead| {
            let mut table = MessageWeightTable::zero(r, n);
            let acc = rows[lead];
            let w: u32 = acc.iter().map(|x| x.count_ones()).sum();
            table.bump(1, w as usize);
            if r > 1 {
                dfs(&rows, lead + 1, 2, acc, &mut table);
            }
            table
        })
        .reduce(|| MessageWeightTable::zero(r, n), MessageWeightTable::merge)
}

/// Enumerate all messages of weight 1..=r through the generator and
/// tabulate (message weight, codeword weight) counts.
pub fn message_weight_table(gen: &BitMatrix, r: usize) -> MessageWeightTable {
    let r = r.min(gen.rows()).max(1);
    match gen.words_per_row() {
        1 => scan::<1>(gen, r),
        2 => scan::<2>(gen, r),
        _ => {
            assert!(gen.words_per_row() <= MAX_WORDS, "code length above {}", MAX_WORDS * 64);
            scan::<MAX_WORDS>(gen, r)
        }
    }
}

/// Exact weight histogram by full message enumeration in Gray-code order
/// (one row XOR per codeword). Cost 2^k; callers cap k.
pub fn full_weight_histogram(gen: &BitMatrix) -> Vec<u64> {
    let k = gen.rows();
    assert!(k <= 30, "full enumeration capped at k = 30");
    let wpr = gen.words_per_row();
    let mut hist = vec![0u64; gen.cols() + 1];
    let mut acc = vec![0u64; wpr];
    hist[0] += 1;
    for i in 1u64..(1u64 << k) {
        let flip = i.trailing_zeros() as usize;
        for (a, b) in acc.iter_mut().zip(gen.row(flip)) {
            *a ^= b;
        }
        let w: u32 = acc.iter().map(|x| x.count_ones()).sum();
        hist[w as usize] += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming8() -> BitMatrix {
        BitMatrix::from_01_rows(&["10000111", "01001011", "00101101", "00011110"]).unwrap()
    }

    #[test]
    fn full_histogram_of_extended_hamming() {
        let hist = full_weight_histogram(&hamming8());
        let mut expect = vec![0u64; 9];
        expect[0] = 1;
        expect[4] = 14;
        expect[8] = 1;
        assert_eq!(hist, expect);
    }

    #[test]
    fn table_counts_match_full_enumeration() {
        let gen = hamming8();
        let table = message_weight_table(&gen, 4);
        let hist = full_weight_histogram(&gen);
        for w in 1..=8 {
            assert_eq!(table.count_upto(4, w), hist[w], "weight {w}");
        }
        assert_eq!(table.min_seen_weight(), Some(4));
    }

    #[test]
    fn partial_depth_counts_are_message_exact() {
        let gen = hamming8();
        let table = message_weight_table(&gen, 2);
        // by hand: 4 single rows of weight 4; 6 pairs
        let singles: u64 = (1..=8).map(|w| table.count(1, w)).sum();
        let pairs: u64 = (1..=8).map(|w| table.count(2, w)).sum();
        assert_eq!(singles, 4);
        assert_eq!(pairs, 6);
    }
}
