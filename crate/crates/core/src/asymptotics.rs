//! Growth rates of count sequences and the asymptotic invariant
//! `F^∞ = max(1, limsup |a_n|^{1/n})` of the Floer-dimension sequence.
//!
//! The limsup is bracketed by the maximum of `ln|a_n| / n` over the tail
//! window `n ∈ [⌈h/2⌉, h]` for a horizon `h`. For a bounded sequence the
//! estimate is `max(1, B^{2/h})`, which tends to 1 but stays above it at any
//! finite horizon; periodic inputs are known to be bounded and are reported
//! with growth exactly 1.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::big_ln;
use crate::error::{Error, Result};
use crate::periodic::{expand_counts, NielsenData};
use crate::subshift::{trace_formula_sequence, SignedSubshiftFamily};
use crate::torus::{nielsen_numbers, TorusMap};

pub const MIN_HORIZON: u64 = 4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthEstimate {
    pub value: f64,
    pub horizon: u64,
    /// First index of the tail window; `per_n_logs[i]` belongs to
    /// `n = window_start + i`.
    pub window_start: u64,
    /// `ln|a_n| / n`, `None` where `a_n = 0`.
    pub per_n_logs: Vec<Option<f64>>,
}

impl GrowthEstimate {
    fn from_window(horizon: u64, window_start: u64, per_n_logs: Vec<Option<f64>>) -> Self {
        let best = per_n_logs.iter().flatten().copied().fold(f64::NEG_INFINITY, f64::max);
        let value = if best > 0.0 { best.exp().max(1.0) } else { 1.0 };
        Self {
            value,
            horizon,
            window_start,
            per_n_logs,
        }
    }

    pub fn log_value(&self) -> f64 {
        self.value.ln()
    }
}

fn window(horizon: u64) -> Result<std::ops::RangeInclusive<u64>> {
    if horizon < MIN_HORIZON {
        return Err(Error::InvalidInput(format!(
            "horizon must be at least {MIN_HORIZON}, got {horizon}"
        )));
    }
    Ok(horizon.div_ceil(2)..=horizon)
}

/// Growth-rate estimate of `n -> a(n)` at the given horizon.
pub fn growth_rate<F>(a: F, horizon: u64) -> Result<GrowthEstimate>
where
    F: Fn(u64) -> BigInt,
{
    let w = window(horizon)?;
    let start = *w.start();
    let logs = w.map(|n| per_n_log(&a(n), n)).collect();
    Ok(GrowthEstimate::from_window(horizon, start, logs))
}

/// Same estimator applied to a precomputed sequence `seq[n - 1] = a_n`.
pub fn growth_rate_of_sequence(seq: &[BigInt], horizon: u64) -> Result<GrowthEstimate> {
    let w = window(horizon)?;
    if seq.len() < horizon as usize {
        return Err(Error::InvalidInput(format!(
            "sequence has {} terms, horizon {horizon} needs all of them",
            seq.len()
        )));
    }
    let start = *w.start();
    let logs = w.map(|n| per_n_log(&seq[n as usize - 1], n)).collect();
    Ok(GrowthEstimate::from_window(horizon, start, logs))
}

fn per_n_log(a: &BigInt, n: u64) -> Option<f64> {
    let l = big_ln(a);
    l.is_finite().then(|| l / n as f64)
}

/// `h(φ) = ln |λ_1| = ln((|tr| + √(tr² - 4)) / 2)`.
pub fn torus_entropy(t: &TorusMap) -> Result<f64> {
    if !t.is_hyperbolic() {
        return Err(Error::Domain(format!("torus map {} is not hyperbolic", t.matrix())));
    }
    // ln|tr| + ln((1 + √(1 - 4/tr²)) / 2), which stays finite for huge traces
    let ln_tr = big_ln(&t.trace());
    let inv_sq = (-2.0 * ln_tr).exp();
    Ok(ln_tr + ((1.0 + (1.0 - 4.0 * inv_sq).sqrt()) / 2.0).ln())
}

/// Inputs for which the asymptotic invariant is defined.
#[derive(Debug, Clone, Copy)]
pub enum GrowthSource<'a> {
    Torus(&'a TorusMap),
    Periodic(&'a NielsenData),
    Subshift(&'a SignedSubshiftFamily),
}

/// `F^∞` estimated at the given horizon.
///
/// Torus maps use their Floer dimensions, subshift families use
/// `|Σ ε_i tr A_i^n|`. Periodic data has a bounded count sequence, so
/// `limsup |N_n|^{1/n} <= 1` and the value is exactly 1; the window logs
/// are still reported.
pub fn asymptotic_invariant(input: GrowthSource<'_>, horizon: u64) -> Result<GrowthEstimate> {
    window(horizon)?;
    match input {
        GrowthSource::Torus(t) => growth_rate_of_sequence(&nielsen_numbers(t, horizon as usize)?, horizon),
        GrowthSource::Periodic(d) => {
            let mut est = growth_rate_of_sequence(&expand_counts(d, horizon as usize), horizon)?;
            est.value = 1.0;
            Ok(est)
        }
        GrowthSource::Subshift(f) => growth_rate_of_sequence(&trace_formula_sequence(f, horizon as usize), horizon),
    }
}
