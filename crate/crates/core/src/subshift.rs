//! Subshifts of finite type and signed families of them.
//!
//! A pseudo-Anosov map with a Markov partition has fixed-point counts
//! `N(f^n) = Σ_i ε_i tr(A_i^n)` for a family of 0/1 transition matrices
//! `A_i` and signs `ε_i`, which makes its zeta function the rational
//! product `Π_i det(I - A_i z)^{-ε_i}`. The transition data is taken as
//! given; identifying the zeta product with the Floer dimension zeta
//! function of the mapping class is conjectural.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{IntegerMatrix, Polynomial, RationalFunction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subshift {
    transition: IntegerMatrix,
}

impl Subshift {
    pub fn new(transition: IntegerMatrix) -> Result<Self> {
        if let Some(bad) = transition.entries().find(|e| !e.is_zero() && !e.is_one()) {
            return Err(Error::InvalidInput(format!(
                "transition matrix entries must be 0 or 1, found {bad}"
            )));
        }
        Ok(Self { transition })
    }

    pub fn from_i64<const N: usize>(rows: [[i64; N]; N]) -> Result<Self> {
        Self::new(IntegerMatrix::from_i64(rows))
    }

    pub fn full_shift(symbols: usize) -> Self {
        let rows = vec![vec![1i64; symbols]; symbols];
        Self::new(IntegerMatrix::from_rows(rows).expect("square")).expect("0/1 entries")
    }

    pub fn transition(&self) -> &IntegerMatrix {
        &self.transition
    }

    pub fn alphabet_size(&self) -> usize {
        self.transition.dim()
    }

    fn allowed(&self, from: usize, to: usize) -> bool {
        self.transition.get(from, to).is_one()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = Error;

    fn try_from(v: i8) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidInput(format!("sign must be +1 or -1, got {other}"))),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSubshiftFamily {
    pieces: Vec<(Subshift, Sign)>,
}

impl SignedSubshiftFamily {
    pub fn new(pieces: Vec<(Subshift, Sign)>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidInput("subshift family needs at least one piece".into()));
        }
        Ok(Self { pieces })
    }

    pub fn single(s: Subshift) -> Self {
        Self {
            pieces: vec![(s, Sign::Plus)],
        }
    }

    pub fn pieces(&self) -> &[(Subshift, Sign)] {
        &self.pieces
    }
}

/// `#Fix(σ^n) = tr(A^n)`.
pub fn trace_count(s: &Subshift, n: u64) -> BigInt {
    s.transition.pow(n).trace()
}

/// Limits on the enumeration oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub max_length: u64,
    pub max_alphabet: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        Self {
            max_length: 12,
            max_alphabet: 6,
        }
    }
}

/// Counts cyclic words `x_0 … x_{n-1}` with every transition
/// `x_i -> x_{(i+1) mod n}` allowed, by depth-first enumeration.
pub fn brute_force_count(s: &Subshift, n: u64, caps: EnumerationCaps) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("word length must be at least 1".into()));
    }
    if n > caps.max_length {
        return Err(Error::ResourceLimit(format!(
            "word length {n} exceeds enumeration cap {}",
            caps.max_length
        )));
    }
    let k = s.alphabet_size();
    if k > caps.max_alphabet {
        return Err(Error::ResourceLimit(format!(
            "alphabet size {k} exceeds enumeration cap {}",
            caps.max_alphabet
        )));
    }
    let succ: Vec<Vec<usize>> = (0..k).map(|i| (0..k).filter(|&j| s.allowed(i, j)).collect()).collect();
    let count_from = |start: usize| -> u64 {
        // remaining steps, current symbol
        let mut stack = vec![(n - 1, start)];
        let mut total = 0u64;
        while let Some((left, cur)) = stack.pop() {
            if left == 0 {
                if s.allowed(cur, start) {
                    total += 1;
                }
                continue;
            }
            for &next in &succ[cur] {
                stack.push((left - 1, next));
            }
        }
        total
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((0..k).into_par_iter().map(count_from).sum())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((0..k).map(count_from).sum())
    }
}

/// `Σ_i ε_i tr(A_i^n)`. May be negative.
pub fn trace_formula(f: &SignedSubshiftFamily, n: u64) -> BigInt {
    f.pieces
        .iter()
        .map(|(s, e)| BigInt::from(e.value()) * trace_count(s, n))
        .sum()
}

/// `Σ_i ε_i tr(A_i^n)` for `n = 1..=count`, by successive multiplication.
pub fn trace_formula_sequence(f: &SignedSubshiftFamily, count: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); count];
    for (s, e) in &f.pieces {
        let sign = BigInt::from(e.value());
        let mut power = s.transition.clone();
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                power = power.mul(&s.transition).expect("same dimension");
            }
            *slot += &sign * power.trace();
        }
    }
    out
}

/// `Π_i det(I - A_i z)^{-ε_i}`, reduced.
pub fn subshift_zeta(f: &SignedSubshiftFamily) -> RationalFunction {
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for (s, e) in &f.pieces {
        let p = s.transition.reversed_char_poly();
        match e {
            Sign::Plus => den = den.mul(&p),
            Sign::Minus => num = num.mul(&p),
        }
    }
    RationalFunction::new(num, den).expect("det(I - Az) has constant term 1")
}
