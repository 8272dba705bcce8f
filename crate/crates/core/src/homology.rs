//! Lefschetz numbers and the Lefschetz zeta function of a graded action on
//! rational homology.
//!
//! For a symplectomorphism the Euler-characteristic zeta function of its
//! Floer homology coincides with the Lefschetz zeta function, so
//! [`euler_symplectic_zeta`] and [`lefschetz_zeta`] return the same object.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{IntegerMatrix, Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// Matrices of the induced maps `H_k(M; Q) -> H_k(M; Q)`, `k = 0..=D`,
/// written in integral bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedHomologyAction {
    matrices: Vec<IntegerMatrix>,
}

impl GradedHomologyAction {
    pub fn new(matrices: Vec<IntegerMatrix>) -> Result<Self> {
        if matrices.is_empty() {
            return Err(Error::InvalidInput("homology action needs at least one degree".into()));
        }
        Ok(Self { matrices })
    }

    /// Action on a closed connected oriented surface: exactly three degrees,
    /// with 1x1 matrices in degrees 0 and 2.
    pub fn surface(matrices: Vec<IntegerMatrix>) -> Result<Self> {
        if matrices.len() != 3 {
            return Err(Error::InvalidInput(format!(
                "surface action needs degrees 0, 1, 2; got {} matrices",
                matrices.len()
            )));
        }
        for k in [0, 2] {
            if matrices[k].dim() != 1 {
                return Err(Error::InvalidInput(format!(
                    "surface action must be 1x1 in degree {k}, got {0}x{0}",
                    matrices[k].dim()
                )));
            }
        }
        Self::new(matrices)
    }

    /// `H_0 = [1]`, `H_1 = A`, `H_2 = [1]`: the action of a linear torus map.
    pub fn torus(a: &IntegerMatrix) -> Self {
        Self {
            matrices: vec![IntegerMatrix::identity(1), a.clone(), IntegerMatrix::identity(1)],
        }
    }

    /// Identity action with the given Betti numbers.
    pub fn identity(betti: &[usize]) -> Result<Self> {
        Self::new(betti.iter().map(|&b| IntegerMatrix::identity(b)).collect())
    }

    pub fn matrices(&self) -> &[IntegerMatrix] {
        &self.matrices
    }

    pub fn top_degree(&self) -> usize {
        self.matrices.len() - 1
    }

    /// Degree-wise block sum, padding the shorter action with zero-dimensional
    /// degrees.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.matrices.len().max(other.matrices.len());
        let matrices = (0..n)
            .map(|k| match (self.matrices.get(k), other.matrices.get(k)) {
                (Some(a), Some(b)) => a.direct_sum(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self { matrices }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.matrices
            .iter()
            .enumerate()
            .map(|(k, m)| if k % 2 == 0 { m.dim() as i64 } else { -(m.dim() as i64) })
            .sum()
    }
}

/// `L(φ^n) = Σ_k (-1)^k tr(φ_{*k}^n)`.
pub fn lefschetz_number(a: &GradedHomologyAction, n: u64) -> BigInt {
    a.matrices.iter().enumerate().fold(BigInt::zero(), |acc, (k, m)| {
        let t = m.pow(n).trace();
        if k % 2 == 0 {
            acc + t
        } else {
            acc - t
        }
    })
}

/// `L(φ^n)` for `n = 1..=count`, computed by successive multiplication.
pub fn lefschetz_numbers(a: &GradedHomologyAction, count: usize) -> Vec<BigInt> {
    let mut powers: Vec<IntegerMatrix> = a.matrices.clone();
    let mut out = Vec::with_capacity(count);
    for n in 1..=count {
        if n > 1 {
            for (p, m) in powers.iter_mut().zip(&a.matrices) {
                *p = p.mul(m).expect("same dimension");
            }
        }
        let l = powers.iter().enumerate().fold(BigInt::zero(), |acc, (k, p)| {
            if k % 2 == 0 {
                acc + p.trace()
            } else {
                acc - p.trace()
            }
        });
        out.push(l);
    }
    out
}

/// `L_φ(z) = Π_k det(I - φ_{*k} z)^{(-1)^{k+1}}`, reduced.
pub fn lefschetz_zeta(a: &GradedHomologyAction) -> RationalFunction {
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for (k, m) in a.matrices.iter().enumerate() {
        let p = m.reversed_char_poly();
        if k % 2 == 1 {
            num = num.mul(&p);
        } else {
            den = den.mul(&p);
        }
    }
    RationalFunction::new(num, den).expect("det(I - Az) has constant term 1")
}

/// Euler-characteristic symplectic zeta function; equal to [`lefschetz_zeta`].
pub fn euler_symplectic_zeta(a: &GradedHomologyAction) -> RationalFunction {
    lefschetz_zeta(a)
}
