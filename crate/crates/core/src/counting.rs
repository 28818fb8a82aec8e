//! Arbitrary-precision partition statistics from recurrences.
//!
//! `P(n)` comes from Euler's pentagonal-number recurrence, memoised in a
//! [`CountTable`]. The remaining statistics are finite sums of `P`:
//!
//! - `Q_k(n) = P(n-k) + P(n-2k) + ...`
//! - `V_k(n) = Q_k(n)`
//! - `S(n)   = P(0) + P(1) + ... + P(n-1)`
//!
//! `P` is zero on negative arguments, which makes every one of these sums
//! terminate without boundary cases.

use std::sync::{OnceLock, RwLock, RwLockReadGuard};

use crate::{BigCount, Error, Result};

/// Memo table of `P(0..=high_water)`, shared across threads.
///
/// Growth happens under the write lock; readers never observe a partially
/// extended table.
#[derive(Debug)]
pub struct CountTable {
    values: RwLock<Vec<BigCount>>,
}

impl Default for CountTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CountTable {
    pub fn new() -> Self {
        Self {
            values: RwLock::new(vec![BigCount::from(1u32)]),
        }
    }

    /// Largest index computed so far.
    pub fn high_water(&self) -> u64 {
        (self.read().len() - 1) as u64
    }

    /// Makes sure `P(n)` is available. Grows by at least doubling.
    pub fn ensure(&self, n: u64) {
        if n <= self.high_water() {
            return;
        }
        let mut values = self.values.write().unwrap_or_else(|e| e.into_inner());
        let have = values.len() as u64;
        if n < have {
            return;
        }
        let target = n.max(2 * have);
        values.reserve((target + 1 - have) as usize);
        for m in have..=target {
            let next = pentagonal_step(&values, m as usize);
            values.push(next);
        }
    }

    /// `P(n)`, or zero for negative `n`.
    pub fn partition_number(&self, n: i64) -> BigCount {
        if n < 0 {
            return BigCount::default();
        }
        self.ensure(n as u64);
        self.read()[n as usize].clone()
    }

    /// `Q_k(n)`, the total number of parts equal to `k` over all partitions of `n`.
    pub fn q_count(&self, k: u64, n: i64) -> Result<BigCount> {
        if k == 0 {
            return Err(Error::InvalidPartIndex(k));
        }
        if n < k as i64 {
            return Ok(BigCount::default());
        }
        self.ensure(n as u64);
        let values = self.read();
        let top = (n as u64 - k) as usize;
        Ok(values[..=top].iter().rev().step_by(k as usize).sum())
    }

    /// `V_k(n)`, via Elder's theorem `V_k(n) = Q_k(n)`.
    pub fn v_count(&self, k: u64, n: i64) -> Result<BigCount> {
        self.q_count(k, n)
    }

    /// `S(n) = P(0) + ... + P(n-1)`; zero for `n = 0`.
    pub fn s_sum(&self, n: u64) -> BigCount {
        if n == 0 {
            return BigCount::default();
        }
        self.ensure(n - 1);
        self.read()[..n as usize].iter().sum()
    }

    /// Copy of `P(0..=n)`.
    pub fn prefix(&self, n: u64) -> Vec<BigCount> {
        self.ensure(n);
        self.read()[..=n as usize].to_vec()
    }

    fn read(&self) -> RwLockReadGuard<'_, Vec<BigCount>> {
        self.values.read().unwrap_or_else(|e| e.into_inner())
    }
}

/// `P(m) = sum_{j>=1} (-1)^(j+1) [P(m - j(3j-1)/2) + P(m - j(3j+1)/2)]`.
fn pentagonal_step(values: &[BigCount], m: usize) -> BigCount {
    let mut plus = BigCount::default();
    let mut minus = BigCount::default();
    for j in 1.. {
        let g1 = j * (3 * j - 1) / 2;
        if g1 > m {
            break;
        }
        let g2 = j * (3 * j + 1) / 2;
        let acc = if j % 2 == 1 { &mut plus } else { &mut minus };
        *acc += &values[m - g1];
        if g2 <= m {
            *acc += &values[m - g2];
        }
    }
    plus - minus
}

/// Process-wide table used by the free functions below.
pub fn shared_table() -> &'static CountTable {
    static TABLE: OnceLock<CountTable> = OnceLock::new();
    TABLE.get_or_init(CountTable::new)
}

pub fn partition_number(n: i64) -> BigCount {
    shared_table().partition_number(n)
}

pub fn q_count(k: u64, n: i64) -> Result<BigCount> {
    shared_table().q_count(k, n)
}

pub fn v_count(k: u64, n: i64) -> Result<BigCount> {
    shared_table().v_count(k, n)
}

pub fn s_sum(n: u64) -> BigCount {
    shared_table().s_sum(n)
}
