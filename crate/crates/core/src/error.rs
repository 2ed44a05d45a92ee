use crate::rings::RingId;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingId, RingId),

    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(String, String),

    #[error("parse error at token {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Domain(String),

    #[error("unsupported matrix shape: {0}")]
    UnsupportedShape(String),

    #[error("rank-deficient input: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("weight {w} above counting ceiling {ceiling} (estimated {estimate} enumeration steps); raise the ceiling to proceed")]
    CountCeiling { w: usize, ceiling: usize, estimate: u128 },

    #[error("enumerator outside known families for n={n}, d={d}: {detail}")]
    UnknownEnumerator { n: usize, d: usize, detail: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
