//! Reidemeister torsion of the mapping torus with coefficients in a
//! one-dimensional flat bundle of holonomy `λ`, `|λ| = 1`.
//!
//! Two independent routes are provided: the product of determinants
//! `Π_i |det(I - λ M_i)|^{(-1)^i}` ([`torsion_direct`], complex Gaussian
//! elimination) and the special value `|L_φ(λ)|^{-1}` of the reduced
//! Lefschetz zeta function ([`torsion_via_zeta`]).
//!
//! Homology matrices stand in for the cohomology actions; the moduli of
//! `det(I - λM)` and `det(I - λM^T)` agree.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{lefschetz_zeta, GradedHomologyAction};

/// Tolerance for the unit-modulus check and for zero/pole detection.
pub const UNIT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawHolonomy", into = "RawHolonomy")]
pub struct UnitHolonomy {
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct RawHolonomy {
    re: f64,
    im: f64,
}

impl TryFrom<RawHolonomy> for UnitHolonomy {
    type Error = Error;

    fn try_from(r: RawHolonomy) -> Result<Self> {
        UnitHolonomy::new(r.re, r.im)
    }
}

impl From<UnitHolonomy> for RawHolonomy {
    fn from(u: UnitHolonomy) -> Self {
        RawHolonomy { re: u.re, im: u.im }
    }
}

impl UnitHolonomy {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        let m = re * re + im * im;
        if !m.is_finite() || (m - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::InvalidInput(format!(
                "holonomy ({re}, {im}) does not have modulus one"
            )));
        }
        Ok(Self { re, im })
    }

    /// `e^{iθ}`.
    pub fn from_angle(theta: f64) -> Self {
        Self {
            re: theta.cos(),
            im: theta.sin(),
        }
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Determinant of a dense complex matrix by Gaussian elimination with
/// partial pivoting.
#[allow(clippy::needless_range_loop)]
fn complex_det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&a, &b| m[a][k].norm().total_cmp(&m[b][k].norm()))
            .expect("non-empty range");
        if m[pivot][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != k {
            m.swap(pivot, k);
            det = -det;
        }
        let p = m[k][k];
        det *= p;
        for i in k + 1..n {
            let factor = m[i][k] / p;
            if factor.norm() == 0.0 {
                continue;
            }
            for j in k..n {
                let v = m[k][j];
                m[i][j] -= factor * v;
            }
        }
    }
    det
}

/// `Π_i |det(I - λ M_i)|^{(-1)^i}`.
pub fn torsion_direct(a: &GradedHomologyAction, lambda: UnitHolonomy) -> Result<f64> {
    let l = lambda.to_complex();
    let mut log_total = 0.0;
    for (k, m) in a.matrices().iter().enumerate() {
        let n = m.dim();
        let rows: Vec<Vec<Complex64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let entry = m.get(i, j).to_f64().expect("matrix entry fits in f64");
                        let id = if i == j { 1.0 } else { 0.0 };
                        Complex64::new(id, 0.0) - l * entry
                    })
                    .collect()
            })
            .collect();
        let d = complex_det(rows).norm();
        if d <= UNIT_TOLERANCE {
            return Err(Error::Domain(format!(
                "not acyclic in degree {k}: |det(I - λ·M_{k})| = {d:e} at λ = ({}, {})",
                lambda.re, lambda.im
            )));
        }
        log_total += if k % 2 == 0 { d.ln() } else { -d.ln() };
    }
    Ok(log_total.exp())
}

/// `|L_φ(λ)|^{-1}` from the reduced Lefschetz zeta function.
pub fn torsion_via_zeta(a: &GradedHomologyAction, lambda: UnitHolonomy) -> Result<f64> {
    let zeta = lefschetz_zeta(a);
    let (num, den) = zeta.eval_complex_parts(lambda.to_complex());
    if den.norm() <= UNIT_TOLERANCE {
        return Err(Error::Domain(format!(
            "λ = ({}, {}) is a pole of the Lefschetz zeta function",
            lambda.re, lambda.im
        )));
    }
    if num.norm() <= UNIT_TOLERANCE {
        return Err(Error::Domain(format!(
            "λ = ({}, {}) is a zero of the Lefschetz zeta function",
            lambda.re, lambda.im
        )));
    }
    Ok(den.norm() / num.norm())
}

/// Relative difference `|a - b| / max(|a|, |b|)`.
pub fn relative_difference(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
