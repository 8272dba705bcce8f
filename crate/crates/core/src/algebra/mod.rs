//! Exact integer/rational linear algebra, polynomials, rational functions
//! and truncated power series.

mod matrix;
mod poly;
mod ratfunc;
mod series;

pub use matrix::IntegerMatrix;
pub use poly::Polynomial;
pub use ratfunc::{expand_rational, RationalFunction};
pub use series::{zeta_series_from_counts, FormalPowerSeries};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical `"p/q"` / `"p"` form.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Converts to `f64` without overflowing on huge numerators/denominators.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    let ln = big_ln(r.numer()) - big_ln(r.denom());
    sign * ln.exp()
}

/// Natural logarithm of `|n|`; `-inf` for zero.
///
/// Uses the top 64 bits for the mantissa and the bit length for the
/// exponent, so the result is accurate to double precision regardless of
/// the size of `n`.
pub fn big_ln(n: &BigInt) -> f64 {
    let m = n.magnitude();
    if m.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = m.bits();
    if bits <= 64 {
        return m.to_u64().map(|v| (v as f64).ln()).unwrap_or(f64::NAN);
    }
    let shift = bits - 64;
    let top = (m >> shift).to_u64().expect("64 leading bits fit in u64");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    #[test]
    fn rational_text_round_trip() {
        for r in [rat(0, 1), rat(-3, 4), rat(10, 5), rat(7, -21)] {
            let s = format_rational(&r);
            assert_eq!(parse_rational(&s), Some(r));
        }
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = rat(0, 17);
        assert!(z.numer().is_zero());
        assert!(z.denom().is_one());
    }

    #[test]
    fn big_ln_matches_f64_on_small_and_huge() {
        assert!((big_ln(&BigInt::from(1000)) - 1000f64.ln()).abs() < 1e-12);
        let huge = BigInt::from(3).pow(500u32);
        let expected = 500.0 * 3f64.ln();
        assert!(((big_ln(&huge) - expected) / expected).abs() < 1e-12);
        assert_eq!(big_ln(&BigInt::zero()), f64::NEG_INFINITY);
        assert!((big_ln(&BigInt::from(-8)) - 8f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn huge_rational_to_f64() {
        let r = Rational::new(BigInt::from(10).pow(400u32), BigInt::from(10).pow(399u32) * 4);
        assert!((rational_to_f64(&r) - 2.5).abs() < 1e-12);
    }
}
