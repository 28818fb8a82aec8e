//! Truncated formal power series with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of degree `N` stores `c[0..=N]`; every operation
//! discards terms above `x^N`. Infinite products such as
//! `prod_{n>=1} 1/(1 - x^n)` become finite because factors with `n > N` only
//! touch degrees above `N`.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(0, 1, degree)
    }

    /// `coeff * x^power`, or zero when `power > degree`.
    pub fn monomial(power: usize, coeff: impl Into<BigInt>, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if power <= degree {
            s.coeffs[power] = coeff.into();
        }
        s
    }

    /// Builds a degree-`degree` series from leading coefficients, padding with
    /// zeros and dropping anything past `x^degree`.
    pub fn from_coeffs<I, T>(degree: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(degree);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the truncation degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::DegreeMismatch {
                left: self.truncation_degree(),
                right: other.truncation_degree(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated at the shared degree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let degree = self.truncation_degree();
        let mut out = Self::zero(degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=degree - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(Neg::neg).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    /// Human form such as `1 + 2x - x^3 + O(x^4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let mag = if negative { -c } else { c.clone() };
            match (wrote, negative) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.truncation_degree() + 1)
    }
}

/// `x^k + x^{2k} + ... = x^k / (1 - x^k)`, truncated at `degree`.
///
/// `k = 0` has no meaning here; it yields the zero series.
pub fn geometric_factor(k: usize, degree: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(degree);
    if k > 0 {
        for i in (k..=degree).step_by(k) {
            s.coeffs[i] = BigInt::one();
        }
    }
    s
}

/// `1 / (1 - x^k) = 1 + x^k + x^{2k} + ...` written out as its 0/1 pattern.
pub fn inverse_one_minus_power(k: usize, degree: usize) -> TruncatedSeries {
    let mut s = geometric_factor(k, degree);
    s.coeffs[0] += 1;
    s
}

/// `1 - x^k`.
pub fn one_minus_power(k: usize, degree: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(degree);
    if k <= degree {
        s.coeffs[k] -= 1;
    }
    s
}

/// `x^k + 2x^{2k} + 3x^{3k} + ...`, the weighted count of copies of `k`.
pub fn weighted_geometric(k: usize, degree: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(degree);
    if k > 0 {
        for (i, d) in (k..=degree).step_by(k).enumerate() {
            s.coeffs[d] = BigInt::from(i + 1);
        }
    }
    s
}

/// `prod_{n=1}^{degree} 1/(1 - x^n)`, whose coefficient of `x^m` is `P(m)`.
pub fn euler_product(degree: usize) -> TruncatedSeries {
    (1..=degree).fold(TruncatedSeries::one(degree), |acc, n| {
        acc.mul(&inverse_one_minus_power(n, degree))
            .expect("factors share the truncation degree")
    })
}

/// Generating function of `Q_k`: `x^k/(1 - x^k) * prod_{n>=1} 1/(1 - x^n)`.
pub fn q_generating_series(k: usize, degree: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(Error::InvalidPartIndex(0));
    }
    geometric_factor(k, degree).mul(&euler_product(degree))
}
