use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Counterexample, PointOutcome, VerificationReport};
use super::{run_grid, VerifyOptions};
use crate::counting::{partition_number, q_count, shared_table};
use crate::partition::BruteTally;
use crate::{BigCount, Error, Result};

/// Which count a congruence talks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    /// `P(x)`.
    Partitions,
    /// `Q_C(x)`, occurrences of the part `C`.
    Occurrences(u64),
}

/// `statistic(A*n + B) ≡ 0 (mod m)` for every `n >= 0`.
///
/// Serialised as `{"statistic": "Q", "C": 5, "A": 5, "B": 4, "m": 5}`; `C` is
/// omitted for `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ClaimFields", into = "ClaimFields")]
pub struct CongruenceClaim {
    statistic: Statistic,
    slope: u64,
    offset: u64,
    modulus: u64,
}

impl CongruenceClaim {
    pub fn new(statistic: Statistic, slope: u64, offset: u64, modulus: u64) -> Result<Self> {
        if slope == 0 {
            return Err(Error::InvalidClaim("A must be at least 1".into()));
        }
        if modulus < 2 {
            return Err(Error::InvalidClaim(format!("m must be at least 2, got {modulus}")));
        }
        if statistic == Statistic::Occurrences(0) {
            return Err(Error::InvalidClaim("C must be at least 1".into()));
        }
        Ok(Self { statistic, slope, offset, modulus })
    }

    /// `P(A*n + B) ≡ 0 (mod m)`.
    pub fn partitions(slope: u64, offset: u64, modulus: u64) -> Result<Self> {
        Self::new(Statistic::Partitions, slope, offset, modulus)
    }

    /// `Q_C(A*n + B) ≡ 0 (mod m)`.
    pub fn occurrences(part: u64, slope: u64, offset: u64, modulus: u64) -> Result<Self> {
        Self::new(Statistic::Occurrences(part), slope, offset, modulus)
    }

    pub fn statistic(&self) -> Statistic {
        self.statistic
    }

    /// `A`.
    pub fn slope(&self) -> u64 {
        self.slope
    }

    /// `B`.
    pub fn offset(&self) -> u64 {
        self.offset
    }

    /// `m`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Argument `A*n + B` at which the statistic is evaluated.
    pub fn argument(&self, n: u64) -> u64 {
        self.slope * n + self.offset
    }

    /// The statistic at `A*n + B`.
    pub fn evaluate(&self, n: u64) -> BigCount {
        let x = self.argument(n) as i64;
        match self.statistic {
            Statistic::Partitions => partition_number(x),
            Statistic::Occurrences(c) => q_count(c, x).expect("C is validated"),
        }
    }

    /// `Q_A(A*n + B)` with the same modulus. Every term of
    /// `Q_A(A*n + B) = sum_i P(A*(n - i) + B)` lies in the same progression, so a
    /// true `P` congruence carries over.
    pub fn induced_occurrences(&self) -> Option<Self> {
        match self.statistic {
            Statistic::Partitions => Some(Self {
                statistic: Statistic::Occurrences(self.slope),
                ..*self
            }),
            Statistic::Occurrences(_) => None,
        }
    }

    fn brute_value(&self, tally: &BruteTally) -> BigCount {
        match self.statistic {
            Statistic::Partitions => tally.partition_count().clone(),
            Statistic::Occurrences(c) => tally.occurrences(c),
        }
    }
}

impl fmt::Display for CongruenceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.statistic {
            Statistic::Partitions => f.write_str("P(")?,
            Statistic::Occurrences(c) => write!(f, "Q_{c}(")?,
        }
        if self.slope != 1 {
            write!(f, "{}", self.slope)?;
        }
        f.write_str("n")?;
        if self.offset != 0 {
            write!(f, "+{}", self.offset)?;
        }
        write!(f, ") ≡ 0 (mod {})", self.modulus)
    }
}

#[derive(Serialize, Deserialize)]
struct ClaimFields {
    statistic: String,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    part: Option<u64>,
    #[serde(rename = "A")]
    slope: u64,
    #[serde(rename = "B")]
    offset: u64,
    #[serde(rename = "m")]
    modulus: u64,
}

impl TryFrom<ClaimFields> for CongruenceClaim {
    type Error = Error;

    fn try_from(f: ClaimFields) -> Result<Self> {
        let statistic = match (f.statistic.as_str(), f.part) {
            ("P", None) => Statistic::Partitions,
            ("Q", Some(c)) => Statistic::Occurrences(c),
            ("P", Some(_)) => return Err(Error::InvalidClaim("C only applies to Q".into())),
            ("Q", None) => return Err(Error::InvalidClaim("Q needs a part index C".into())),
            (other, _) => return Err(Error::InvalidClaim(format!("unknown statistic `{other}`"))),
        };
        Self::new(statistic, f.slope, f.offset, f.modulus)
    }
}

impl From<CongruenceClaim> for ClaimFields {
    fn from(c: CongruenceClaim) -> Self {
        let (statistic, part) = match c.statistic {
            Statistic::Partitions => ("P", None),
            Statistic::Occurrences(k) => ("Q", Some(k)),
        };
        Self {
            statistic: statistic.into(),
            part,
            slope: c.slope,
            offset: c.offset,
            modulus: c.modulus,
        }
    }
}

/// Checks the claim for `0 <= n <= n_max`, recording every `n` whose value is
/// not divisible by `m`. Arguments within the oracle bound are also counted by
/// brute force; a disagreement is reported with the brute value as `expected`.
pub fn verify_congruence(
    claim: &CongruenceClaim,
    n_max: u64,
    opts: &VerifyOptions,
) -> VerificationReport {
    shared_table().ensure(claim.argument(n_max));
    let modulus = BigCount::from(claim.modulus);
    run_grid(claim.to_string(), 0, n_max as i64, opts, |n| {
        let value = claim.evaluate(n as u64);
        let residue = value.mod_floor(&modulus);
        let brute = opts
            .tally_for(claim.argument(n as u64) as i64)
            .map(|t| claim.brute_value(&t));
        let disagrees = brute.as_ref().is_some_and(|b| b != &value);
        let used_oracle = brute.is_some();
        let failure = (!residue.is_zero() || disagrees).then(|| Counterexample {
            n,
            k: None,
            r: None,
            value: value.into(),
            residue: residue.into(),
            expected: brute.filter(|_| disagrees).map(BigInt::from),
        });
        vec![PointOutcome { failure, used_oracle }]
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimSource {
    /// Stated and proved as a theorem.
    Theorem,
    /// Stated without proof; shipped as a testable claim.
    Asserted,
    /// `C = A` variant of an asserted claim, justified by the `Q_A` expansion.
    DerivedRepair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuiltinClaim {
    pub claim: CongruenceClaim,
    pub source: ClaimSource,
    /// Whether finite checking is expected to find no counterexample.
    pub expected_to_hold: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuiltinOutcome {
    #[serde(flatten)]
    pub builtin: BuiltinClaim,
    pub report: VerificationReport,
    pub as_expected: bool,
}

/// The shipped congruence claims.
///
/// The two higher-power `Q_5` claims are expected to fail: `Q_5(24) = 660 ≡ 10
/// (mod 25)` and `Q_5(99) = 196960400 ≡ 25 (mod 125)`. Their `C = A` variants
/// hold.
pub fn builtin_claims() -> Vec<BuiltinClaim> {
    use ClaimSource::*;
    let q = |c, a, b, m, source, expected_to_hold| BuiltinClaim {
        claim: CongruenceClaim::occurrences(c, a, b, m).expect("valid builtin"),
        source,
        expected_to_hold,
    };
    vec![
        q(5, 5, 4, 5, Theorem, true),
        q(7, 7, 5, 7, Theorem, true),
        q(11, 11, 6, 11, Theorem, true),
        q(5, 25, 24, 25, Asserted, false),
        q(5, 125, 99, 125, Asserted, false),
        q(25, 25, 24, 25, DerivedRepair, true),
        q(125, 125, 99, 125, DerivedRepair, true),
    ]
}

/// Ramanujan's congruences for `P`, including the 25 and 125 cases.
pub fn ramanujan_claims() -> Vec<CongruenceClaim> {
    [(5, 4, 5), (7, 5, 7), (11, 6, 11), (25, 24, 25), (125, 99, 125)]
        .into_iter()
        .map(|(a, b, m)| CongruenceClaim::partitions(a, b, m).expect("valid claim"))
        .collect()
}

/// Runs every builtin claim to `n_max`.
pub fn verify_builtin(n_max: u64, opts: &VerifyOptions) -> Vec<BuiltinOutcome> {
    builtin_claims()
        .into_iter()
        .map(|builtin| {
            let report = verify_congruence(&builtin.claim, n_max, opts);
            let as_expected = report.passed() == builtin.expected_to_hold;
            BuiltinOutcome { builtin, report, as_expected }
        })
        .collect()
}

/// Tries `Q_C(A*n + B) ≡ 0 (mod m)` for each `C` in `1..=c_max` and keeps the
/// values of `C` with no counterexample up to `n_max`, in increasing order.
pub fn scan_for_c(
    slope: u64,
    offset: u64,
    modulus: u64,
    c_max: u64,
    n_max: u64,
    opts: &VerifyOptions,
) -> Result<Vec<(u64, VerificationReport)>> {
    CongruenceClaim::occurrences(1, slope, offset, modulus)?;
    if c_max == 0 {
        return Ok(Vec::new());
    }
    shared_table().ensure(slope * n_max + offset);
    Ok((1..=c_max)
        .into_par_iter()
        .map(|c| {
            let claim = CongruenceClaim::occurrences(c, slope, offset, modulus).expect("validated above");
            (c, verify_congruence(&claim, n_max, opts))
        })
        .filter(|(_, report)| report.passed())
        .collect())
}
