//! Exact computation of dynamical zeta functions for surface maps.
//!
//! Four input classes are supported:
//!
//! - graded homology actions ([`homology`]): Lefschetz numbers and the
//!   Lefschetz zeta function, which coincides with the Euler-characteristic
//!   symplectic zeta function;
//! - hyperbolic torus maps ([`torus`]): Nielsen numbers, Floer dimensions and
//!   the rational dimension zeta function obtained by the sign rule;
//! - periodic maps ([`periodic`]): the dimension zeta function as a product
//!   of radicals of cyclotomic factors, via Möbius inversion;
//! - signed subshift families ([`subshift`]): signed trace formulas and the
//!   rational zeta product.
//!
//! All generating-function identities are exact: coefficients live in
//! [`algebra::Rational`] and every closed form can be expanded into a
//! truncated [`algebra::FormalPowerSeries`] and compared coefficient-wise.
//! Floating point only appears in [`torsion`] and [`asymptotics`].

pub mod algebra;
pub mod asymptotics;
pub mod error;
pub mod homology;
pub mod periodic;
pub mod problem;
pub mod subshift;
pub mod torsion;
pub mod torus;

pub use error::{Error, Result};

/// Default truncation order for series comparisons.
pub const DEFAULT_ORDER: usize = 32;
/// Default horizon for growth-rate estimates.
pub const DEFAULT_HORIZON: u64 = 60;
