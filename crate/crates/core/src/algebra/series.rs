use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{format_rational, Polynomial, Rational};
use crate::error::{Error, Result};

/// Power series truncated at degree `order`, with exact coefficients for
/// degrees `0..=order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalPowerSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl FormalPowerSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are stored.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![Rational::one()])
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.order.min(other.order);
        Self::new(k, (0..=k).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = self.order.min(other.order);
        Self::new(k, (0..=k).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let k = self.order.min(other.order);
        let mut out = vec![Rational::zero(); k + 1];
        for (i, a) in self.coeffs.iter().take(k + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(k + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(k, out)
    }

    /// Exponential of a series with zero constant term, from the recurrence
    /// `n f_n = sum_{k=1}^{n} k s_k f_{n-k}` (i.e. `f' = s' f`).
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(format!(
                "series exp needs constant term 0, got {}",
                format_rational(&self.coeffs[0])
            )));
        }
        let mut f: Vec<Rational> = Vec::with_capacity(self.order + 1);
        f.push(Rational::one());
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let s = &self.coeffs[k];
                if !s.is_zero() {
                    acc += s * Rational::from_integer(BigInt::from(k)) * &f[n - k];
                }
            }
            f.push(acc / Rational::from_integer(BigInt::from(n)));
        }
        Ok(Self {
            order: self.order,
            coeffs: f,
        })
    }

    /// Logarithm of a series with constant term 1, from
    /// `n s_n = n f_n - sum_{k=1}^{n-1} k s_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(format!(
                "series log needs constant term 1, got {}",
                format_rational(&self.coeffs[0])
            )));
        }
        let mut s: Vec<Rational> = vec![Rational::zero(); self.order + 1];
        #[allow(clippy::needless_range_loop)]
        for n in 1..=self.order {
            let nn = Rational::from_integer(BigInt::from(n));
            let mut acc = &self.coeffs[n] * &nn;
            for k in 1..n {
                if !s[k].is_zero() {
                    acc -= &s[k] * Rational::from_integer(BigInt::from(k)) * &self.coeffs[n - k];
                }
            }
            s[n] = acc / nn;
        }
        Ok(Self {
            order: self.order,
            coeffs: s,
        })
    }

    /// Largest absolute coefficient difference, as a float, over the common
    /// order. Zero means the truncations agree exactly.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let k = self.order.min(other.order);
        (0..=k)
            .map(|i| super::rational_to_f64(&(&self.coeffs[i] - &other.coeffs[i])).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

/// Truncation at order `K = counts.len()` of `exp(sum_{n=1}^{K} a_n z^n / n)`.
pub fn zeta_series_from_counts(counts: &[BigInt]) -> FormalPowerSeries {
    let order = counts.len();
    let mut s = vec![Rational::zero()];
    for (i, a) in counts.iter().enumerate() {
        s.push(Rational::new(a.clone(), BigInt::from(i + 1)));
    }
    FormalPowerSeries::new(order, s).exp().expect("constant term is zero")
}
