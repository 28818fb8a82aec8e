//! Finite verification of partition identities and congruences.
//!
//! Every check runs over an explicit range and says so in its
//! [`VerificationReport`]; nothing here claims a universally quantified result.
//! Identity checks use the recurrences from [`crate::counting`] and, in oracle
//! mode, cross-check small `n` against brute-force enumeration.

mod congruence;
mod report;

pub use congruence::{
    builtin_claims, ramanujan_claims, scan_for_c, verify_builtin, verify_congruence,
    BuiltinClaim, BuiltinOutcome, ClaimSource, CongruenceClaim, Statistic,
};
pub use report::{Counterexample, VerificationReport};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::counting::{q_count, s_sum, shared_table, v_count};
use crate::partition::{BruteTally, EnumerationCap};
use crate::{BigCount, Result};
use report::{PointOutcome, ReportBuilder};

/// Brute-force cross-checks are on by default up to this `n`.
pub const DEFAULT_ORACLE_LIMIT: u64 = 40;
/// Counterexamples kept per report.
pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub oracle: bool,
    pub oracle_limit: u64,
    pub enumeration_cap: EnumerationCap,
    pub counterexample_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            oracle: true,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            enumeration_cap: EnumerationCap::default(),
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
        }
    }
}

impl VerifyOptions {
    pub fn without_oracle(self) -> Self {
        Self { oracle: false, ..self }
    }

    /// Largest `n` that gets a brute-force cross-check, if any.
    pub(crate) fn oracle_bound(&self) -> Option<u64> {
        self.oracle
            .then(|| self.oracle_limit.min(self.enumeration_cap.get()))
    }

    fn tally_for(&self, n: i64) -> Option<BruteTally> {
        let bound = self.oracle_bound()?;
        (n >= 0 && n as u64 <= bound).then(|| {
            BruteTally::compute(n as u64, self.enumeration_cap).expect("n is within the cap")
        })
    }
}

/// First mismatching `(lhs, rhs)` pair as a counterexample.
fn compare(n: i64, k: Option<u64>, r: Option<u64>, pairs: &[(&BigCount, &BigCount)]) -> Option<Counterexample> {
    pairs.iter().find(|(l, r)| l != r).map(|(lhs, rhs)| {
        let value = BigInt::from((*lhs).clone());
        let expected = BigInt::from((*rhs).clone());
        Counterexample {
            n,
            k,
            r,
            residue: &value - &expected,
            value,
            expected: Some(expected),
        }
    })
}

/// Evaluates `row(n)` for every `n` in `lo..=hi` in parallel and folds the
/// outcomes in grid order, so the report matches a sequential run.
fn run_grid<F>(claim: String, lo: i64, hi: i64, opts: &VerifyOptions, row: F) -> VerificationReport
where
    F: Fn(i64) -> Vec<PointOutcome> + Sync + Send,
{
    let rows: Vec<Vec<PointOutcome>> = (lo..=hi).into_par_iter().map(row).collect();
    let mut builder = ReportBuilder::new(claim, lo, hi, opts.counterexample_cap);
    for outcome in rows.into_iter().flatten() {
        builder.point(outcome);
    }
    builder.finish()
}

fn q(k: u64, n: i64) -> BigCount {
    q_count(k, n).expect("part index is positive")
}

/// `S(n) = Q_1(n)` for `0 <= n <= n_max`.
pub fn verify_stanley(n_max: u64, opts: &VerifyOptions) -> VerificationReport {
    shared_table().ensure(n_max);
    run_grid("S(n) = Q_1(n)".into(), 0, n_max as i64, opts, |n| {
        let s = s_sum(n as u64);
        let q1 = q(1, n);
        let tally = opts.tally_for(n);
        let failure = match &tally {
            Some(t) => {
                let brute_q1 = t.occurrences(1);
                compare(n, None, None, &[
                    (t.distinct_total(), &brute_q1),
                    (&s, t.distinct_total()),
                    (&q1, &brute_q1),
                    (&s, &q1),
                ])
            }
            None => compare(n, None, None, &[(&s, &q1)]),
        };
        vec![PointOutcome { failure, used_oracle: tally.is_some() }]
    })
}

/// `V_k(n) = Q_k(n)` for `0 <= n <= n_max`, `1 <= k <= k_max`, with `V_k`
/// counted by brute force. Fails if `n_max` exceeds the enumeration cap.
pub fn verify_elder(n_max: u64, k_max: u64, opts: &VerifyOptions) -> Result<VerificationReport> {
    opts.enumeration_cap.check(n_max)?;
    shared_table().ensure(n_max);
    let claim = format!("V_k(n) = Q_k(n) [1<=k<={k_max}]");
    Ok(run_grid(claim, 0, n_max as i64, opts, |n| {
        let tally = BruteTally::compute(n as u64, opts.enumeration_cap).expect("n is within the cap");
        (1..=k_max)
            .map(|k| {
                let qk = q(k, n);
                let brute_v = tally.repeated(k);
                let failure = if opts.oracle {
                    let brute_q = tally.occurrences(k);
                    compare(n, Some(k), None, &[(&brute_v, &qk), (&brute_q, &qk)])
                } else {
                    compare(n, Some(k), None, &[(&brute_v, &qk)])
                };
                PointOutcome { failure, used_oracle: true }
            })
            .collect()
    }))
}

/// `S(n) = Q_k(n) + Q_k(n+1) + ... + Q_k(n+k-1)` for `1 <= n <= n_max`,
/// `1 <= k <= k_max`.
pub fn verify_theorem1(n_max: u64, k_max: u64, opts: &VerifyOptions) -> VerificationReport {
    shared_table().ensure(n_max + k_max);
    let claim = format!("S(n) = sum_(i<k) Q_k(n+i) [1<=k<={k_max}]");
    run_grid(claim, 1, n_max as i64, opts, |n| {
        let s = s_sum(n as u64);
        let tally = opts.tally_for(n);
        (1..=k_max)
            .map(|k| {
                let rhs: BigCount = (0..k as i64).map(|i| q(k, n + i)).sum();
                let failure = match &tally {
                    Some(t) => compare(n, Some(k), None, &[(t.distinct_total(), &s), (&s, &rhs)]),
                    None => compare(n, Some(k), None, &[(&s, &rhs)]),
                };
                PointOutcome { failure, used_oracle: tally.is_some() }
            })
            .collect()
    })
}

/// `V_k(n) = Q_{rk}(n) + Q_{rk}(n+k) + ... + Q_{rk}(n+(r-1)k)` for
/// `0 <= n <= n_max`, `1 <= k <= k_max`, `1 <= r <= r_max`.
pub fn verify_theorem2(n_max: u64, k_max: u64, r_max: u64, opts: &VerifyOptions) -> VerificationReport {
    shared_table().ensure(n_max + k_max * r_max);
    let claim = format!("V_k(n) = sum_(j<r) Q_rk(n+jk) [1<=k<={k_max}; 1<=r<={r_max}]");
    run_grid(claim, 0, n_max as i64, opts, |n| {
        let tally = opts.tally_for(n);
        let mut row = Vec::with_capacity((k_max * r_max) as usize);
        for k in 1..=k_max {
            let v = v_count(k, n).expect("part index is positive");
            let brute_v = tally.as_ref().map(|t| t.repeated(k));
            for r in 1..=r_max {
                let rhs: BigCount = (0..r).map(|j| q(r * k, n + (j * k) as i64)).sum();
                let failure = match &brute_v {
                    Some(bv) => compare(n, Some(k), Some(r), &[(bv, &v), (&v, &rhs)]),
                    None => compare(n, Some(k), Some(r), &[(&v, &rhs)]),
                };
                row.push(PointOutcome { failure, used_oracle: brute_v.is_some() });
            }
        }
        row
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stanley_small() {
        let r = verify_stanley(40, &VerifyOptions::default());
        assert!(r.passed());
        assert_eq!(r.range(), (0, 40));
        assert_eq!(r.checked(), 41);
        assert_eq!(r.oracle_points(), 41);

        let vacuous = verify_stanley(0, &VerifyOptions::default());
        assert!(vacuous.passed());
        assert_eq!(vacuous.checked(), 1);
    }

    #[test]
    fn oracle_switch() {
        let r = verify_stanley(50, &VerifyOptions::default().without_oracle());
        assert!(r.passed());
        assert_eq!(r.oracle_points(), 0);
        let r = verify_stanley(50, &VerifyOptions::default());
        assert_eq!(r.oracle_points(), 41);
    }

    #[test]
    fn elder_small_and_cap() {
        let r = verify_elder(40, 10, &VerifyOptions::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked(), 41 * 10);
        assert!(verify_elder(61, 2, &VerifyOptions::default()).is_err());
    }

    #[test]
    fn theorem1_instances() {
        // Q_2(5) + Q_2(6) = 4 + 8 = 12 = S(5)
        assert_eq!(q(2, 5) + q(2, 6), s_sum(5));
        assert_eq!(s_sum(5), BigCount::from(12u32));
        assert!(verify_theorem1(60, 12, &VerifyOptions::default()).passed());
    }

    #[test]
    fn theorem2_instances() {
        // Q_4(6) + Q_4(8) = 2 + 6 = 8 = V_2(6)
        assert_eq!(q(4, 6), BigCount::from(2u32));
        assert_eq!(q(4, 8), BigCount::from(6u32));
        assert!(verify_theorem2(40, 6, 5, &VerifyOptions::default()).passed());
    }

    #[test]
    fn degenerate_parameters_reduce_to_originals() {
        let opts = VerifyOptions::default();
        assert_eq!(verify_theorem1(30, 1, &opts).passed(), verify_stanley(30, &opts).passed());
        assert_eq!(
            verify_theorem2(30, 5, 1, &opts).passed(),
            verify_elder(30, 5, &opts).unwrap().passed()
        );
    }

    #[test]
    fn compare_reports_difference() {
        let a = BigCount::from(7u32);
        let b = BigCount::from(9u32);
        let cx = compare(3, Some(2), None, &[(&a, &a), (&a, &b)]).unwrap();
        assert_eq!(cx.value, BigInt::from(7));
        assert_eq!(cx.expected, Some(BigInt::from(9)));
        assert_eq!(cx.residue, BigInt::from(-2));
        assert!(compare(3, None, None, &[(&a, &a)]).is_none());
    }
}
