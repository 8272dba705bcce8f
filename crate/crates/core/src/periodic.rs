//! Dimension zeta function of periodic surface maps.
//!
//! If `φ^m = id`, the counts `N_n = dim HF(φ^n)` depend only on
//! `gcd(n, m)`, and the zeta function factors as
//! `Π_{d | m} (1 - z^d)^{-P(d)/d}` where `P` is the Möbius transform of
//! `N` over the divisors of `m`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, FormalPowerSeries, Rational};
use crate::error::{Error, Result};

/// Möbius function.
pub fn moebius(n: u64) -> i32 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let mut n = n;
    let mut result = 1;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && divisors(n).len() == 2
}

/// Nielsen (= Floer dimension) counts of a map of least period `m`, indexed
/// by the divisors of `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NielsenData {
    period: u64,
    counts: BTreeMap<u64, BigInt>,
}

impl NielsenData {
    pub fn new(period: u64, counts: BTreeMap<u64, BigInt>) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidInput("period must be positive".into()));
        }
        for (&d, n) in &counts {
            if d == 0 || !period.is_multiple_of(d) {
                return Err(Error::InvalidInput(format!(
                    "count index {d} does not divide period {period}"
                )));
            }
            if n.is_negative() {
                return Err(Error::InvalidInput(format!("count N_{d} = {n} is negative")));
            }
        }
        if let Some(d) = divisors(period).into_iter().find(|d| !counts.contains_key(d)) {
            return Err(Error::InvalidInput(format!(
                "missing count for divisor {d} of period {period}"
            )));
        }
        Ok(Self { period, counts })
    }

    pub fn from_pairs(period: u64, pairs: &[(u64, i64)]) -> Result<Self> {
        Self::new(period, pairs.iter().map(|&(d, n)| (d, BigInt::from(n))).collect())
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn counts(&self) -> &BTreeMap<u64, BigInt> {
        &self.counts
    }

    /// `N_d` for a divisor `d` of the period.
    pub fn count(&self, d: u64) -> &BigInt {
        &self.counts[&d]
    }
}

/// `N_1..N_horizon`, using `N_k = N_{gcd(k, m)}`.
pub fn expand_counts(data: &NielsenData, horizon: usize) -> Vec<BigInt> {
    (1..=horizon as u64)
        .map(|k| data.count(k.gcd(&data.period)).clone())
        .collect()
}

/// `P(d) = N_d - Σ_{d' | d, d' ≠ d} P(d')`.
pub fn p_coefficients_recursive(data: &NielsenData) -> BTreeMap<u64, BigInt> {
    let mut p: BTreeMap<u64, BigInt> = BTreeMap::new();
    for d in divisors(data.period) {
        let lower: BigInt = divisors(d).into_iter().filter(|&e| e != d).map(|e| p[&e].clone()).sum();
        p.insert(d, data.count(d) - lower);
    }
    p
}

/// `P(d) = Σ_{e | d} μ(e) N_{d/e}`.
pub fn p_coefficients_moebius(data: &NielsenData) -> BTreeMap<u64, BigInt> {
    divisors(data.period)
        .into_iter()
        .map(|d| {
            let sum: BigInt = divisors(d)
                .into_iter()
                .map(|e| BigInt::from(moebius(e)) * data.count(d / e))
                .sum();
            (d, sum)
        })
        .collect()
}

/// Möbius coefficients `P(d)` from the recursion, cross-checked against the
/// explicit Möbius sum.
pub fn p_coefficients(data: &NielsenData) -> Result<BTreeMap<u64, BigInt>> {
    let rec = p_coefficients_recursive(data);
    let mob = p_coefficients_moebius(data);
    if rec != mob {
        return Err(Error::Inconsistent(format!(
            "Möbius recursion {rec:?} disagrees with explicit sum {mob:?}"
        )));
    }
    Ok(rec)
}

/// Formal product `Π_d (1 - z^d)^{e_d}` with rational exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CyclotomicProduct {
    factors: BTreeMap<u64, Rational>,
}

impl CyclotomicProduct {
    /// Zero exponents are dropped.
    pub fn new(factors: BTreeMap<u64, Rational>) -> Result<Self> {
        if factors.contains_key(&0) {
            return Err(Error::InvalidInput("cyclotomic factor index must be positive".into()));
        }
        Ok(Self {
            factors: factors.into_iter().filter(|(_, e)| !e.is_zero()).collect(),
        })
    }

    pub fn factors(&self) -> &BTreeMap<u64, Rational> {
        &self.factors
    }

    pub fn exponent(&self, d: u64) -> Option<&Rational> {
        self.factors.get(&d)
    }

    pub fn to_pretty(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(d, e)| {
                let base = if *d == 1 {
                    "(1 - z)".to_string()
                } else {
                    format!("(1 - z^{d})")
                };
                format!("{base}^({})", format_rational(e))
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

/// `F_φ(z) = Π_{d | m} (1 - z^d)^{-P(d)/d}`.
pub fn periodic_zeta(data: &NielsenData) -> Result<CyclotomicProduct> {
    let p = p_coefficients(data)?;
    CyclotomicProduct::new(
        p.into_iter()
            .map(|(d, pd)| (d, Rational::new(-pd, BigInt::from(d))))
            .collect(),
    )
}

/// Product of the generalized binomial series of each factor, truncated.
pub fn expand_cyclotomic(c: &CyclotomicProduct, order: usize) -> FormalPowerSeries {
    let mut acc = FormalPowerSeries::one(order);
    for (&d, e) in &c.factors {
        let d = d as usize;
        // (1 - z^d)^e = Σ_j binom(e, j) (-1)^j z^{dj}
        let mut coeffs = vec![Rational::zero(); order + 1];
        let mut binom = Rational::one();
        let mut j = 0usize;
        while d * j <= order {
            coeffs[d * j] = if j.is_multiple_of(2) {
                binom.clone()
            } else {
                -binom.clone()
            };
            // binom(e, j+1) = binom(e, j) (e - j) / (j + 1)
            binom = binom * (e - Rational::from_integer(BigInt::from(j))) / Rational::from_integer(BigInt::from(j + 1));
            j += 1;
        }
        acc = acc.mul(&FormalPowerSeries::new(order, coeffs));
    }
    acc
}

/// Closed form for prime period `m`:
/// `(1 - z)^{-N_1} · ((1 - z^m)^{N_1 - N_m})^{1/m}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePeriodForm {
    pub period: u64,
    pub n1: BigInt,
    pub root_power: BigInt,
}

impl PrimePeriodForm {
    pub fn to_pretty(&self) -> String {
        format!(
            "1/(1 - z)^{} * ((1 - z^{})^({}))^(1/{})",
            self.n1, self.period, self.root_power, self.period
        )
    }

    pub fn as_product(&self) -> CyclotomicProduct {
        let mut f = BTreeMap::new();
        f.insert(1, Rational::from_integer(-self.n1.clone()));
        f.insert(
            self.period,
            Rational::new(self.root_power.clone(), BigInt::from(self.period)),
        );
        CyclotomicProduct::new(f).expect("positive indices")
    }
}

/// The prime-period closed form, or `None` when the period is not prime.
pub fn prime_period_form(data: &NielsenData) -> Option<PrimePeriodForm> {
    let m = data.period;
    if !is_prime(m) {
        return None;
    }
    Some(PrimePeriodForm {
        period: m,
        n1: data.count(1).clone(),
        root_power: data.count(1) - data.count(m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, zeta_series_from_counts};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// μ from its defining property Σ_{d|n} μ(d) = [n = 1], built bottom-up.
    fn moebius_table(max: u64) -> Vec<i32> {
        let mut mu = vec![0i32; max as usize + 1];
        for n in 1..=max {
            let partial: i32 = divisors(n)
                .into_iter()
                .filter(|&d| d != n)
                .map(|d| mu[d as usize])
                .sum();
            mu[n as usize] = i32::from(n == 1) - partial;
        }
        mu
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
        let table = moebius_table(500);
        for n in 1..=500 {
            assert_eq!(moebius(n), table[n as usize], "n = {n}");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(is_prime(31) && !is_prime(1) && !is_prime(35));
    }

    #[test]
    fn validation() {
        assert!(NielsenData::from_pairs(6, &[(1, 1), (2, 2), (3, 3)]).is_err());
        assert!(NielsenData::from_pairs(2, &[(1, 1), (2, 2), (4, 3)]).is_err());
        assert!(NielsenData::from_pairs(2, &[(1, -1), (2, 2)]).is_err());
        assert!(NielsenData::from_pairs(0, &[]).is_err());
    }

    #[test]
    fn expand_counts_examples() {
        let d = NielsenData::from_pairs(2, &[(1, 2), (2, 4)]).unwrap();
        assert_eq!(expand_counts(&d, 4), ints(&[2, 4, 2, 4]));
        let c = NielsenData::from_pairs(1, &[(1, 7)]).unwrap();
        assert_eq!(expand_counts(&c, 3), ints(&[7, 7, 7]));
        let six = NielsenData::from_pairs(6, &[(1, 11), (2, 12), (3, 13), (6, 16)]).unwrap();
        assert_eq!(expand_counts(&six, 6), ints(&[11, 12, 13, 12, 11, 16]));
    }

    #[test]
    fn p_coefficient_examples() {
        let d = NielsenData::from_pairs(2, &[(1, 2), (2, 4)]).unwrap();
        assert_eq!(
            p_coefficients(&d).unwrap(),
            [(1, 2), (2, 2)].map(|(k, v)| (k, BigInt::from(v))).into()
        );
        let d = NielsenData::from_pairs(3, &[(1, 1), (3, 4)]).unwrap();
        assert_eq!(
            p_coefficients(&d).unwrap(),
            [(1, 1), (3, 3)].map(|(k, v)| (k, BigInt::from(v))).into()
        );
        let d = NielsenData::from_pairs(1, &[(1, 9)]).unwrap();
        assert_eq!(p_coefficients(&d).unwrap(), [(1, BigInt::from(9))].into());
    }

    #[test]
    fn periodic_zeta_examples() {
        let d = NielsenData::from_pairs(2, &[(1, 2), (2, 4)]).unwrap();
        let z = periodic_zeta(&d).unwrap();
        assert_eq!(z.factors(), &[(1, rat(-2, 1)), (2, rat(-1, 1))].into());

        let d3 = NielsenData::from_pairs(3, &[(1, 1), (3, 4)]).unwrap();
        let z3 = periodic_zeta(&d3).unwrap();
        assert_eq!(z3.factors(), &[(1, rat(-1, 1)), (3, rat(-1, 1))].into());
        assert_eq!(prime_period_form(&d3).unwrap().as_product(), z3);

        let radical = NielsenData::from_pairs(2, &[(1, 0), (2, 1)]).unwrap();
        let zr = periodic_zeta(&radical).unwrap();
        assert_eq!(zr.factors(), &[(2, rat(-1, 2))].into());
        assert_eq!(
            expand_cyclotomic(&zr, 4).coeffs(),
            &[rat(1, 1), rat(0, 1), rat(1, 2), rat(0, 1), rat(3, 8)]
        );
    }

    #[test]
    fn expand_cyclotomic_examples() {
        let geo = CyclotomicProduct::new([(1, rat(-1, 1))].into()).unwrap();
        assert_eq!(expand_cyclotomic(&geo, 3).to_strings(), ["1", "1", "1", "1"]);
        let half = CyclotomicProduct::new([(2, rat(-1, 2))].into()).unwrap();
        assert_eq!(expand_cyclotomic(&half, 4).to_strings(), ["1", "0", "1/2", "0", "3/8"]);
        let two = CyclotomicProduct::new([(1, rat(-2, 1)), (2, rat(-1, 1))].into()).unwrap();
        assert_eq!(expand_cyclotomic(&two, 2).to_strings(), ["1", "2", "4"]);
        assert_eq!(
            expand_cyclotomic(&CyclotomicProduct::default(), 2).to_strings(),
            ["1", "0", "0"]
        );
    }

    #[test]
    fn prime_form_rendering() {
        let d = NielsenData::from_pairs(5, &[(1, 3), (5, 8)]).unwrap();
        let form = prime_period_form(&d).unwrap();
        assert_eq!(form.to_pretty(), "1/(1 - z)^3 * ((1 - z^5)^(-5))^(1/5)");
        assert_eq!(form.as_product(), periodic_zeta(&d).unwrap());
        assert!(prime_period_form(&NielsenData::from_pairs(4, &[(1, 1), (2, 1), (4, 1)]).unwrap()).is_none());
    }

    fn nielsen_data() -> impl Strategy<Value = NielsenData> {
        (1u64..=36).prop_flat_map(|m| {
            let ds = divisors(m);
            prop::collection::vec(0i64..=50, ds.len()).prop_map(move |vals| {
                NielsenData::new(m, ds.iter().zip(vals).map(|(&d, v)| (d, BigInt::from(v))).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn inversion_round_trip(data in nielsen_data()) {
            let p = p_coefficients(&data).unwrap();
            for d in divisors(data.period()) {
                let sum: BigInt = divisors(d).into_iter().map(|e| p[&e].clone()).sum();
                prop_assert_eq!(&sum, data.count(d));
            }
        }

        #[test]
        fn product_matches_exponential_of_counts(data in nielsen_data()) {
            let k = 24;
            let lhs = expand_cyclotomic(&periodic_zeta(&data).unwrap(), k);
            prop_assert_eq!(lhs, zeta_series_from_counts(&expand_counts(&data, k)));
        }
    }
}
