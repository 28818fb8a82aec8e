use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("refusing to enumerate partitions of {n}: enumeration cap is {cap} (raise it with --enum-cap)")]
    EnumerationCapExceeded { n: u64, cap: u64 },

    #[error("part index k must be a positive integer, got {0}")]
    InvalidPartIndex(u64),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("truncation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid congruence claim: {0}")]
    InvalidClaim(String),

    #[error("invalid diagram marks: {0}")]
    InvalidMarks(String),
}
