use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One failing point of a range check.
///
/// For congruences `value` is the statistic and `residue` its remainder mod
/// `m`. For identities `value` is the left-hand side, `expected` the
/// right-hand side and `residue` their difference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(with = "decimal")]
    pub value: BigInt,
    #[serde(with = "decimal")]
    pub residue: BigInt,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "decimal_opt")]
    pub expected: Option<BigInt>,
}

/// Outcome of a finite check. `passed` holds exactly when no counterexample
/// was found; it never asserts anything beyond `range`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawReport")]
pub struct VerificationReport {
    claim: String,
    range: [i64; 2],
    passed: bool,
    counterexamples: Vec<Counterexample>,
    counterexamples_total: u64,
    checked: u64,
    oracle_points: u64,
}

impl VerificationReport {
    pub fn claim(&self) -> &str {
        &self.claim
    }

    /// Inclusive `[lo, hi]` interval of `n`; empty when `lo > hi`.
    pub fn range(&self) -> (i64, i64) {
        (self.range[0], self.range[1])
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    /// Recorded counterexamples, capped; see [`Self::counterexamples_total`].
    pub fn counterexamples(&self) -> &[Counterexample] {
        &self.counterexamples
    }

    pub fn counterexamples_total(&self) -> u64 {
        self.counterexamples_total
    }

    /// Number of grid points evaluated.
    pub fn checked(&self) -> u64 {
        self.checked
    }

    /// Number of grid points also cross-checked against brute-force enumeration.
    pub fn oracle_points(&self) -> u64 {
        self.oracle_points
    }
}

#[derive(Deserialize)]
struct RawReport {
    claim: String,
    range: [i64; 2],
    passed: bool,
    counterexamples: Vec<Counterexample>,
    counterexamples_total: u64,
    checked: u64,
    #[serde(default)]
    oracle_points: u64,
}

impl TryFrom<RawReport> for VerificationReport {
    type Error = String;

    fn try_from(raw: RawReport) -> Result<Self, String> {
        if raw.passed != raw.counterexamples.is_empty()
            || raw.passed != (raw.counterexamples_total == 0)
        {
            return Err("`passed` disagrees with the counterexample list".into());
        }
        Ok(Self {
            claim: raw.claim,
            range: raw.range,
            passed: raw.passed,
            counterexamples: raw.counterexamples,
            counterexamples_total: raw.counterexamples_total,
            checked: raw.checked,
            oracle_points: raw.oracle_points,
        })
    }
}

#[derive(Debug)]
pub(crate) struct ReportBuilder {
    claim: String,
    range: [i64; 2],
    cap: usize,
    counterexamples: Vec<Counterexample>,
    total: u64,
    checked: u64,
    oracle_points: u64,
}

impl ReportBuilder {
    pub(crate) fn new(claim: impl Into<String>, lo: i64, hi: i64, cap: usize) -> Self {
        Self {
            claim: claim.into(),
            range: [lo, hi],
            cap: cap.max(1),
            counterexamples: Vec::new(),
            total: 0,
            checked: 0,
            oracle_points: 0,
        }
    }

    /// Folds in one evaluated point, in grid order.
    pub(crate) fn point(&mut self, outcome: PointOutcome) {
        self.checked += 1;
        if outcome.used_oracle {
            self.oracle_points += 1;
        }
        if let Some(cx) = outcome.failure {
            self.total += 1;
            if self.counterexamples.len() < self.cap {
                self.counterexamples.push(cx);
            }
        }
    }

    pub(crate) fn finish(self) -> VerificationReport {
        VerificationReport {
            claim: self.claim,
            range: self.range,
            passed: self.total == 0,
            counterexamples: self.counterexamples,
            counterexamples_total: self.total,
            checked: self.checked,
            oracle_points: self.oracle_points,
        }
    }
}

#[derive(Debug, Default)]
pub(crate) struct PointOutcome {
    pub(crate) failure: Option<Counterexample>,
    pub(crate) used_oracle: bool,
}

pub(crate) mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

mod decimal_opt {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(D::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: i64) -> Counterexample {
        Counterexample {
            n,
            k: None,
            r: None,
            value: BigInt::from(660),
            residue: BigInt::from(10),
            expected: None,
        }
    }

    #[test]
    fn cap_limits_list_but_not_total() {
        let mut b = ReportBuilder::new("c", 0, 20, 2);
        for n in 0..5 {
            b.point(PointOutcome { failure: Some(cx(n)), used_oracle: n == 0 });
        }
        b.point(PointOutcome::default());
        let r = b.finish();
        assert!(!r.passed());
        assert_eq!(r.counterexamples().len(), 2);
        assert_eq!(r.counterexamples_total(), 5);
        assert_eq!(r.checked(), 6);
        assert_eq!(r.oracle_points(), 1);
    }

    #[test]
    fn json_shape_and_round_trip() {
        let mut b = ReportBuilder::new("Q_5(25n+24) ≡ 0 (mod 25)", 0, 10, 10);
        b.point(PointOutcome { failure: Some(cx(0)), used_oracle: true });
        let r = b.finish();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["range"], serde_json::json!([0, 10]));
        assert_eq!(v["passed"], false);
        assert_eq!(v["counterexamples"][0]["value"], "660");
        assert_eq!(v["counterexamples"][0]["residue"], "10");
        assert!(v["counterexamples"][0].get("k").is_none());
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn inconsistent_json_is_rejected() {
        let bad = serde_json::json!({
            "claim": "x", "range": [0, 1], "passed": true,
            "counterexamples": [{"n": 0, "value": "1", "residue": "1"}],
            "counterexamples_total": 1, "checked": 2
        });
        assert!(serde_json::from_value::<VerificationReport>(bad).is_err());
    }
}
