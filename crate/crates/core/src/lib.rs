//! Exact integer-partition toolkit.
//!
//! - [`partition`]: canonical partitions, reverse-lexicographic enumeration and
//!   brute-force statistics used as ground truth.
//! - [`counting`]: arbitrary-precision `P(n)`, `Q_k(n)`, `V_k(n)` and `S(n)` from
//!   recurrences over a shared memo table.
//! - [`series`]: truncated formal power series over exact integers, realising the
//!   partition generating function and the generating function of `Q_k`.
//! - [`theorems`]: range-bounded verification of the Stanley/Elder identities,
//!   their generalisations, and partition congruences.
//! - [`ferrers`]: Ferrers diagrams, text rendering and vertical packet addition.
//! - [`cli`]: the `partkit` command-line front end.

pub mod cli;
pub mod counting;
mod error;
pub mod ferrers;
pub mod partition;
pub mod series;
pub mod theorems;

pub use error::{Error, Result};

/// Arbitrary-precision non-negative count.
pub type BigCount = num_bigint::BigUint;
