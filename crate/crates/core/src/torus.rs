//! Linear maps of the 2-torus given by determinant-one integer matrices.
//!
//! For a hyperbolic map `A` every iterate has `|det(I - A^n)|` fixed points,
//! all essential and non-degenerate, so Nielsen numbers, fixed-point counts
//! and Floer dimensions coincide. Their zeta function is rational and is
//! obtained from the Lefschetz zeta function by `z -> σz` followed by the
//! power `(-1)^r`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{IntegerMatrix, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::homology::{lefschetz_zeta, GradedHomologyAction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusMap {
    matrix: IntegerMatrix,
    hyperbolic: bool,
}

/// Sign data of the spectrum: `r` eigenvalues of modulus `> 1`, `p`
/// eigenvalues `< -1`, and `sigma = (-1)^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignData {
    pub r: u32,
    pub p: u32,
    pub sigma: i32,
}

fn check_det_one(m: &IntegerMatrix) -> Result<()> {
    if m.dim() != 2 {
        return Err(Error::Dimension(format!("torus map must be 2x2, got {0}x{0}", m.dim())));
    }
    let d = m.det();
    if !d.is_one() {
        return Err(Error::InvalidInput(format!(
            "torus map must have determinant 1, got {d}"
        )));
    }
    Ok(())
}

/// True iff `|tr m| > 2`, which for determinant one means no eigenvalue of
/// modulus one.
pub fn is_hyperbolic(m: &IntegerMatrix) -> Result<bool> {
    check_det_one(m)?;
    Ok(m.trace().abs() > BigInt::from(2))
}

impl TorusMap {
    pub fn new(matrix: IntegerMatrix) -> Result<Self> {
        let hyperbolic = is_hyperbolic(&matrix)?;
        Ok(Self { matrix, hyperbolic })
    }

    pub fn from_i64(rows: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(IntegerMatrix::from_i64(rows))
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.hyperbolic
    }

    pub fn trace(&self) -> BigInt {
        self.matrix.trace()
    }

    pub fn homology_action(&self) -> GradedHomologyAction {
        GradedHomologyAction::torus(&self.matrix)
    }

    fn require_hyperbolic(&self) -> Result<()> {
        if self.hyperbolic {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "torus map {} is not hyperbolic (|trace| <= 2)",
                self.matrix
            )))
        }
    }
}

/// `N(φ^n) = |det(I - A^n)|`.
pub fn nielsen_number(t: &TorusMap, n: u64) -> Result<BigInt> {
    t.require_hyperbolic()?;
    if n == 0 {
        return Err(Error::InvalidInput("iterate must be at least 1".into()));
    }
    let b = IntegerMatrix::identity(2).sub(&t.matrix.pow(n))?;
    Ok(b.det().abs())
}

/// `N(φ^n)` for `n = 1..=count`.
pub fn nielsen_numbers(t: &TorusMap, count: usize) -> Result<Vec<BigInt>> {
    t.require_hyperbolic()?;
    let id = IntegerMatrix::identity(2);
    let mut power = id.clone();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        power = power.mul(&t.matrix)?;
        out.push(id.sub(&power)?.det().abs());
    }
    Ok(out)
}

/// Total dimension of the Floer homology of `φ^n`; equals the Nielsen number.
pub fn floer_dimension(t: &TorusMap, n: u64) -> Result<BigInt> {
    nielsen_number(t, n)
}

/// A real quadratic surd `(a + s·√disc) / 2` with integer `a`, `disc >= 0`
/// and `s = ±1`, compared exactly against integers.
#[derive(Debug, Clone)]
struct HalfSurd {
    a: BigInt,
    disc: BigInt,
    s: i32,
}

impl HalfSurd {
    /// Sign of `self - c`.
    fn cmp_int(&self, c: i64) -> Ordering {
        // (a - 2c) + s√disc  vs  0
        let rational = &self.a - BigInt::from(2 * c);
        let irr_sign = if self.disc.is_zero() {
            Ordering::Equal
        } else if self.s > 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        let rat_sign = rational.sign_ordering();
        match (rat_sign, irr_sign) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            // opposite signs: compare rational^2 with disc
            (x, _) => match (&rational * &rational).cmp(&self.disc) {
                Ordering::Greater => x,
                Ordering::Less => x.reverse(),
                Ordering::Equal => Ordering::Equal,
            },
        }
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// Exact sign data from the eigenvalues `(tr ± √(tr² - 4)) / 2`.
pub fn sign_data(t: &TorusMap) -> Result<SignData> {
    t.require_hyperbolic()?;
    let tr = t.trace();
    let disc = &tr * &tr - BigInt::from(4);
    let eigen = [1, -1].map(|s| HalfSurd {
        a: tr.clone(),
        disc: disc.clone(),
        s,
    });
    let mut r = 0;
    let mut p = 0;
    for e in &eigen {
        if e.cmp_int(1) == Ordering::Greater || e.cmp_int(-1) == Ordering::Less {
            r += 1;
        }
        if e.cmp_int(-1) == Ordering::Less {
            p += 1;
        }
    }
    Ok(SignData {
        r,
        p,
        sigma: if p % 2 == 0 { 1 } else { -1 },
    })
}

/// `F_φ(z) = L_φ(σz)^{(-1)^r}`.
pub fn torus_zeta(t: &TorusMap) -> Result<RationalFunction> {
    let sd = sign_data(t)?;
    let l = lefschetz_zeta(&t.homology_action());
    let scaled = l.substitute_scaled(&Rational::from_integer(BigInt::from(sd.sigma)));
    if sd.r % 2 == 0 {
        Ok(scaled)
    } else {
        scaled.recip()
    }
}

/// Brute-force count of fixed points of `A^n` on `R^2 / Z^2`.
///
/// Every fixed point `x` satisfies `(A^n - I) x ∈ Z^2`, so it has
/// coordinates in `(1/D) Z` with `D = |det(I - A^n)|`. The oracle checks
/// all `D^2` grid points of the unit square directly. Fails when `D`
/// exceeds `max_denominator`.
pub fn count_fixed_points_on_grid(t: &TorusMap, n: u64, max_denominator: u64) -> Result<u64> {
    t.require_hyperbolic()?;
    let power = t.matrix.pow(n);
    let b = IntegerMatrix::identity(2).sub(&power)?;
    let d_big = b.det().abs();
    let d = d_big
        .to_u64()
        .filter(|&d| d <= max_denominator)
        .ok_or_else(|| Error::ResourceLimit(format!("grid denominator {d_big} exceeds {max_denominator}")))?;
    let reduce = |x: &BigInt| -> i128 { x.mod_floor(&BigInt::from(d)).to_i128().expect("reduced mod d") };
    let (b00, b01, b10, b11) = (
        reduce(b.get(0, 0)),
        reduce(b.get(0, 1)),
        reduce(b.get(1, 0)),
        reduce(b.get(1, 1)),
    );
    let d = d as i128;
    let mut count = 0u64;
    for i in 0..d {
        for j in 0..d {
            if (b00 * i + b01 * j) % d == 0 && (b10 * i + b11 * j) % d == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}
