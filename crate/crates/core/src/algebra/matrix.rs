use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<BigInt>>", into = "Vec<Vec<BigInt>>")]
pub struct IntegerMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Dimension("matrix has no rows".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Dimension(format!(
                    "matrix is not square: row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            entries.extend(row.into_iter().map(Into::into));
        }
        Ok(Self { dim, entries })
    }

    /// Convenience constructor for literals in tests and examples.
    ///
    /// Panics if the rows are not square.
    pub fn from_i64<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("square literal")
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.dim.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        Self { dim: n, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.dim, other.dim
            )));
        }
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Self { dim: n, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension("cannot subtract matrices of different size".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Self { dim: self.dim, entries })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// `self^n` by repeated squaring; `n = 0` gives the identity.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v.div_floor(&prev);
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    /// `det(I - A z)` as a polynomial in `z`.
    ///
    /// The coefficient of `z^k` is `(-1)^k e_k`, where `e_k` is the sum of the
    /// principal `k x k` minors; the coefficients are obtained from the
    /// Faddeev-LeVerrier recursion, which only needs exact integer division.
    pub fn reversed_char_poly(&self) -> Polynomial {
        let n = self.dim;
        // charpoly(x) = x^n + c[1] x^{n-1} + ... + c[n]
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::one();
        let mut m = Self::zeros(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut next = self.mul(&m).expect("same dimension");
            for i in 0..n {
                next.entries[i * n + i] += &c[k - 1];
            }
            m = next;
            let am = self.mul(&m).expect("same dimension");
            let t = am.trace();
            let (q, r) = t.div_rem(&BigInt::from(k as u64));
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            c[k] = -q;
        }
        // det(I - A z) = z^n charpoly(1/z) = sum_k c[k] z^k
        Polynomial::new(c.into_iter().map(Rational::from_integer).collect())
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        let mut out = Self::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                out.entries[(i + self.dim) * n + j + self.dim] = other.get(i, j).clone();
            }
        }
        out
    }
}

impl TryFrom<Vec<Vec<BigInt>>> for IntegerMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<IntegerMatrix> for Vec<Vec<BigInt>> {
    fn from(m: IntegerMatrix) -> Self {
        m.rows()
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
