use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{FormalPowerSeries, Polynomial, Rational};
use crate::error::{Error, Result};

/// Reduced quotient of polynomials, normalized so that the denominator has
/// constant term 1. Two equal rational functions have identical fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    /// Builds and reduces `numerator / denominator`.
    ///
    /// Fails when the denominator is zero or when the reduced denominator
    /// vanishes at `z = 0` (no power-series expansion exists there).
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        if numerator.is_zero() {
            return Ok(Self {
                numerator,
                denominator: Polynomial::one(),
            });
        }
        let g = numerator.gcd(&denominator);
        let (num, _) = numerator.div_rem(&g);
        let (den, _) = denominator.div_rem(&g);
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(Error::Domain(format!(
                "rational function has a pole at z = 0 (denominator {den})"
            )));
        }
        let inv = c0.recip();
        Ok(Self {
            numerator: num.scale(&inv),
            denominator: den.scale(&inv),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self {
            numerator: p,
            denominator: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_one(&self) -> bool {
        self.numerator == Polynomial::one() && self.denominator == Polynomial::one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.numerator.mul(&other.numerator),
            self.denominator.mul(&other.denominator),
        )
        .expect("product of expandable functions is expandable")
    }

    /// Multiplicative inverse; fails if the numerator vanishes at `z = 0`.
    pub fn recip(&self) -> Result<Self> {
        if self.numerator.is_zero() {
            return Err(Error::Domain("cannot invert the zero rational function".into()));
        }
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    pub fn powi(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let k = n.unsigned_abs();
        Ok(Self {
            numerator: base.numerator.pow(k),
            denominator: base.denominator.pow(k),
        })
    }

    /// `f(c z)`.
    pub fn substitute_scaled(&self, c: &Rational) -> Self {
        Self::new(
            self.numerator.substitute_scaled(c),
            self.denominator.substitute_scaled(c),
        )
        .expect("scaling z keeps the constant term")
    }

    /// Exact value at a rational point; `None` at a pole.
    pub fn eval(&self, z: &Rational) -> Option<Rational> {
        let d = self.denominator.eval(z);
        if d.is_zero() {
            None
        } else {
            Some(self.numerator.eval(z) / d)
        }
    }

    /// Returns `(numerator(z), denominator(z))` so the caller can decide how
    /// to treat near-zeros and near-poles.
    pub fn eval_complex_parts(&self, z: Complex64) -> (Complex64, Complex64) {
        (self.numerator.eval_complex(z), self.denominator.eval_complex(z))
    }

    /// Power-series expansion at `z = 0`, truncated at `order`.
    pub fn expand(&self, order: usize) -> FormalPowerSeries {
        // den has constant term 1, so c_n = num_n - sum_{k>=1} den_k c_{n-k}.
        let den = self.denominator.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = self.numerator.coeff(n);
            for (k, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    c -= d * &out[n - k];
                }
            }
            out.push(c);
        }
        debug_assert!(self.denominator.coeff(0).is_one());
        FormalPowerSeries::new(order, out)
    }

    pub fn to_pretty(&self) -> String {
        if self.denominator == Polynomial::one() {
            return self.numerator.to_pretty();
        }
        format!("({}) / ({})", self.numerator, self.denominator)
    }
}

/// `expand_rational`: power-series expansion of a rational function at 0.
pub fn expand_rational(r: &RationalFunction, order: usize) -> FormalPowerSeries {
    r.expand(order)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_integers(c.iter().copied())
    }

    fn series(c: &[Rational]) -> FormalPowerSeries {
        FormalPowerSeries::new(c.len() - 1, c.to_vec())
    }

    #[test]
    fn expansion_examples() {
        let one_minus_z_sq = p(&[1, -1]).pow(2);
        let f = RationalFunction::new(one_minus_z_sq.clone(), p(&[1, -3, 1])).unwrap();
        assert_eq!(f.expand(2), series(&[rat(1, 1), rat(1, 1), rat(3, 1)]));

        let geo = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(geo.expand(3), series(&[rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1)]));

        let g = RationalFunction::new(p(&[1, -3, 1]), one_minus_z_sq).unwrap();
        assert_eq!(g.expand(2), series(&[rat(1, 1), rat(-1, 1), rat(-2, 1)]));
    }

    #[test]
    fn normalizes_constant_term_and_cancels() {
        let f = RationalFunction::new(p(&[2, -2]).mul(&p(&[3, 1])), p(&[-4, 4]).mul(&p(&[2, -1]))).unwrap();
        // (2-2z)(3+z) / ((-4+4z)(2-z)) = -(3+z)/(2(2-z)) = (-3/4 - z/4)/(1 - z/2)
        assert_eq!(f.numerator(), &Polynomial::new(vec![rat(-3, 4), rat(-1, 4)]));
        assert_eq!(f.denominator(), &Polynomial::new(vec![rat(1, 1), rat(-1, 2)]));
        let same = RationalFunction::new(p(&[1, -1]).pow(2), p(&[1, -1]).pow(2)).unwrap();
        assert!(same.is_one());
    }

    #[test]
    fn rejects_poles_at_origin_and_zero_denominator() {
        assert!(RationalFunction::new(p(&[1]), Polynomial::zero()).is_err());
        assert!(RationalFunction::new(p(&[1]), p(&[0, 1])).is_err());
        // z / z reduces to 1, which is fine
        assert!(RationalFunction::new(p(&[0, 1]), p(&[0, 1])).unwrap().is_one());
    }

    #[test]
    fn exact_evaluation() {
        let f = RationalFunction::new(p(&[1, -3, 1]), p(&[1, -1]).pow(2)).unwrap();
        assert_eq!(f.eval(&rat(-1, 1)), Some(rat(5, 4)));
        assert_eq!(f.eval(&rat_int(1)), None);
    }

    fn expandable() -> impl Strategy<Value = RationalFunction> {
        (
            prop::collection::vec(-4i64..=4, 0..4),
            prop::collection::vec(-4i64..=4, 0..4),
        )
            .prop_map(|(n, d)| {
                let mut den = vec![1i64];
                den.extend(d);
                RationalFunction::new(Polynomial::from_integers(n), Polynomial::from_integers(den)).unwrap()
            })
    }

    proptest! {
        #[test]
        fn expansion_is_multiplicative(a in expandable(), b in expandable()) {
            let k = 12;
            prop_assert_eq!(a.mul(&b).expand(k), a.expand(k).mul(&b.expand(k)));
        }

        #[test]
        fn expansion_times_denominator_is_numerator(a in expandable()) {
            let k = 10;
            let back = a.expand(k).mul(&FormalPowerSeries::from_polynomial(a.denominator(), k));
            prop_assert_eq!(back, FormalPowerSeries::from_polynomial(a.numerator(), k));
        }
    }
}
