//! Canonical partitions and exhaustive enumeration.
//!
//! Everything here is deliberately naive: the brute-force statistics walk every
//! partition of `n` and serve as the oracle the recurrence-based code in
//! [`crate::counting`] is checked against.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{BigCount, Error, Result};

/// Largest `n` enumerated unless the caller raises the cap. `P(60) = 966_467`.
pub const DEFAULT_ENUMERATION_CAP: u64 = 60;

/// Upper bound on `n` accepted by the enumerating operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnumerationCap(u64);

impl EnumerationCap {
    pub const fn new(cap: u64) -> Self {
        Self(cap)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn check(self, n: u64) -> Result<()> {
        if n > self.0 {
            Err(Error::EnumerationCapExceeded { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationCap {
    fn default() -> Self {
        Self(DEFAULT_ENUMERATION_CAP)
    }
}

/// A non-increasing sequence of positive parts. The partition of 0 is empty.
///
/// The derived ordering compares part sequences lexicographically, so for a
/// fixed `n` the canonical enumeration order is strictly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
    n: u64,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("part {} is zero", i + 1)));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be non-increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Callers guarantee the parts are positive and non-increasing.
    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let n = parts.iter().sum();
        Self { parts, n }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// `(value, multiplicity)` pairs in order of decreasing value.
    pub fn runs(&self) -> Runs<'_> {
        Runs { parts: &self.parts }
    }

    /// Multiplicity of `k`; zero when `k` is not a part.
    pub fn multiplicity(&self, k: u64) -> u64 {
        self.runs().find(|&(v, _)| v == k).map_or(0, |(_, m)| m)
    }

    pub fn distinct_count(&self) -> usize {
        self.runs().count()
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            occurrences_of: self.runs().collect(),
            distinct_count: self.distinct_count(),
        }
    }
}

impl fmt::Display for Partition {
    /// Writes the `+`-separated form, e.g. `2+2+1`. The
    /// empty partition writes nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `+`-separated non-increasing positive integers. `""`, `"0"` and
    /// `"()"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "()" {
            return Ok(Self::empty());
        }
        let parts = s
            .split('+')
            .map(|t| {
                let t = t.trim();
                t.parse::<u64>()
                    .map_err(|_| Error::InvalidPartition(format!("`{t}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Run-length view of a partition.
#[derive(Clone, Debug)]
pub struct Runs<'a> {
    parts: &'a [u64],
}

impl Iterator for Runs<'_> {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        let &v = self.parts.first()?;
        let len = self.parts.iter().take_while(|&&p| p == v).count();
        self.parts = &self.parts[len..];
        Some((v, len as u64))
    }
}

/// Per-partition multiplicity data.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionStats {
    pub occurrences_of: BTreeMap<u64, u64>,
    pub distinct_count: usize,
}

impl PartitionStats {
    pub fn occurrences(&self, k: u64) -> u64 {
        self.occurrences_of.get(&k).copied().unwrap_or(0)
    }

    /// Number of distinct values occurring at least `k` times.
    pub fn repeated_at_least(&self, k: u64) -> usize {
        self.occurrences_of.values().filter(|&&m| m >= k).count()
    }
}

/// Lazy reverse-lexicographic stream of the partitions of `n`, starting at `[n]`
/// and ending at `[1; n]`.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u64>>,
}

impl Partitions {
    /// Uncapped stream. Prefer [`enumerate_partitions`] at API boundaries.
    pub fn of(n: u64) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..i].to_vec();
            let value = current[i] - 1;
            // the trailing ones plus the unit taken from position i
            let mut rest = (current.len() - i) as u64;
            succ.push(value);
            while rest > 0 {
                let piece = rest.min(value);
                succ.push(piece);
                rest -= piece;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_sorted(current))
    }
}

impl std::iter::FusedIterator for Partitions {}

/// Every partition of `n` exactly once, in reverse-lexicographic order.
pub fn enumerate_partitions(n: u64, cap: EnumerationCap) -> Result<Partitions> {
    cap.check(n)?;
    Ok(Partitions::of(n))
}

/// Totals accumulated over one full enumeration of the partitions of `n`.
///
/// Index `k` of `occurrences` is `Q_k(n)` and of `repeated` is `V_k(n)`, for
/// `1 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteTally {
    n: u64,
    partitions: BigCount,
    occurrences: Vec<BigCount>,
    repeated: Vec<BigCount>,
    distinct_total: BigCount,
}

impl BruteTally {
    pub fn compute(n: u64, cap: EnumerationCap) -> Result<Self> {
        let size = n as usize + 1;
        let mut partitions = 0u128;
        let mut occurrences = vec![0u128; size];
        let mut repeated = vec![0u128; size];
        let mut distinct_total = 0u128;
        for p in enumerate_partitions(n, cap)? {
            partitions += 1;
            for (value, mult) in p.runs() {
                distinct_total += 1;
                occurrences[value as usize] += mult as u128;
                for slot in &mut repeated[1..=mult as usize] {
                    *slot += 1;
                }
            }
        }
        let big = |v: Vec<u128>| v.into_iter().map(BigCount::from).collect();
        Ok(Self {
            n,
            partitions: partitions.into(),
            occurrences: big(occurrences),
            repeated: big(repeated),
            distinct_total: distinct_total.into(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn partition_count(&self) -> &BigCount {
        &self.partitions
    }

    /// Total multiplicity of part `k` (`Q_k(n)`).
    pub fn occurrences(&self, k: u64) -> BigCount {
        lookup(&self.occurrences, k)
    }

    /// Distinct values with multiplicity at least `k`, summed (`V_k(n)`).
    pub fn repeated(&self, k: u64) -> BigCount {
        lookup(&self.repeated, k)
    }

    /// Distinct-part counts, summed (`S(n)`).
    pub fn distinct_total(&self) -> &BigCount {
        &self.distinct_total
    }
}

fn lookup(table: &[BigCount], k: u64) -> BigCount {
    if k == 0 {
        return BigCount::default();
    }
    usize::try_from(k)
        .ok()
        .and_then(|i| table.get(i))
        .cloned()
        .unwrap_or_default()
}

fn require_part_index(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidPartIndex(k))
    } else {
        Ok(())
    }
}

/// `P(n)` by counting the enumeration.
pub fn count_partitions_brute(n: u64, cap: EnumerationCap) -> Result<BigCount> {
    Ok(BigCount::from(enumerate_partitions(n, cap)?.count()))
}

/// `Q_k(n)`: occurrences of the part `k` over all partitions of `n`.
pub fn q_count_brute(k: u64, n: u64, cap: EnumerationCap) -> Result<BigCount> {
    require_part_index(k)?;
    let total: u128 = enumerate_partitions(n, cap)?
        .map(|p| p.multiplicity(k) as u128)
        .sum();
    Ok(total.into())
}

/// `V_k(n)`: over all partitions of `n`, the number of distinct values
/// occurring `k` or more times.
pub fn v_count_brute(k: u64, n: u64, cap: EnumerationCap) -> Result<BigCount> {
    require_part_index(k)?;
    let total: u128 = enumerate_partitions(n, cap)?
        .map(|p| p.runs().filter(|&(_, m)| m >= k).count() as u128)
        .sum();
    Ok(total.into())
}

/// `S(n)`: number of distinct parts, summed over all partitions of `n`.
pub fn s_sum_brute(n: u64, cap: EnumerationCap) -> Result<BigCount> {
    let total: u128 = enumerate_partitions(n, cap)?
        .map(|p| p.distinct_count() as u128)
        .sum();
    Ok(total.into())
}
