//! Browser bindings for the zeta-core demo page.
//!
//! Every export takes plain arguments and returns a JSON string, so the page
//! needs no generated TypeScript types. The `*_json` functions hold the logic
//! and are tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;
use zeta_core::algebra::IntegerMatrix;
use zeta_core::asymptotics::{asymptotic_invariant, torus_entropy, GrowthSource};
use zeta_core::problem::run_json;
use zeta_core::torsion::{torsion_direct, torsion_via_zeta, UnitHolonomy};
use zeta_core::torus::{nielsen_numbers, sign_data, torus_zeta, TorusMap};
use zeta_core::Result;

/// Largest number of Nielsen numbers or torsion samples returned in one call.
pub const MAX_POINTS: usize = 400;

#[derive(Debug, Serialize)]
pub struct TorusSummary {
    pub trace: String,
    pub hyperbolic: bool,
    pub zeta: Option<String>,
    pub sign: Option<[i8; 3]>,
    pub nielsen: Vec<String>,
    /// `ln|N(φ^n)| / n`, `None` where the count vanishes.
    pub log_rates: Vec<Option<f64>>,
    pub entropy: Option<f64>,
    pub growth: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct TorsionSample {
    pub theta: f64,
    pub direct: Option<f64>,
    pub via_zeta: Option<f64>,
}

fn torus_map(a: i64, b: i64, c: i64, d: i64) -> Result<TorusMap> {
    TorusMap::new(IntegerMatrix::from_i64([[a, b], [c, d]]))
}

fn check_points(n: usize) -> Result<()> {
    if n == 0 || n > MAX_POINTS {
        return Err(zeta_core::Error::InvalidInput(format!(
            "point count must be in 1..={MAX_POINTS}, got {n}"
        )));
    }
    Ok(())
}

pub fn analyze_json(input: &str) -> Result<String> {
    Ok(run_json(input, None, None)?.to_json())
}

pub fn torus_json(a: i64, b: i64, c: i64, d: i64, count: usize) -> Result<String> {
    check_points(count)?;
    let t = torus_map(a, b, c, d)?;
    let hyperbolic = t.is_hyperbolic();
    let mut summary = TorusSummary {
        trace: t.trace().to_string(),
        hyperbolic,
        zeta: None,
        sign: None,
        nielsen: Vec::new(),
        log_rates: Vec::new(),
        entropy: None,
        growth: None,
    };
    if hyperbolic {
        let counts = nielsen_numbers(&t, count)?;
        summary.log_rates = counts
            .iter()
            .zip(1..)
            .map(|(x, n)| {
                let l = zeta_core::algebra::big_ln(x);
                l.is_finite().then(|| l / n as f64)
            })
            .collect();
        summary.nielsen = counts.iter().map(ToString::to_string).collect();
        summary.zeta = Some(torus_zeta(&t)?.to_pretty());
        let sd = sign_data(&t)?;
        summary.sign = Some([sd.r as i8, sd.p as i8, sd.sigma as i8]);
        summary.entropy = Some(torus_entropy(&t)?);
        summary.growth = Some(asymptotic_invariant(GrowthSource::Torus(&t), count.max(4) as u64)?.value);
    }
    Ok(serde_json::to_string(&summary).expect("summary serializes"))
}

/// Torsion of the mapping torus of `[[a, b], [c, d]]` at `samples` evenly
/// spaced holonomies `e^{iθ}`, both routes. Points where a route is
/// undefined come back as `null`.
pub fn torsion_json(a: i64, b: i64, c: i64, d: i64, samples: usize) -> Result<String> {
    check_points(samples)?;
    let action = torus_map(a, b, c, d)?.homology_action();
    let curve: Vec<TorsionSample> = (0..samples)
        .map(|k| {
            let theta = std::f64::consts::TAU * (k as f64 + 0.5) / samples as f64;
            let l = UnitHolonomy::from_angle(theta);
            TorsionSample {
                theta,
                direct: torsion_direct(&action, l).ok(),
                via_zeta: torsion_via_zeta(&action, l).ok(),
            }
        })
        .collect();
    Ok(serde_json::to_string(&curve).expect("samples serialize"))
}

fn js_err(e: zeta_core::Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Full verification report for a problem in the CLI input format.
#[wasm_bindgen]
pub fn analyze(input: &str) -> std::result::Result<String, JsValue> {
    analyze_json(input).map_err(js_err)
}

/// Nielsen numbers, zeta function, sign data and entropy of a torus map.
#[wasm_bindgen]
pub fn torus(a: i32, b: i32, c: i32, d: i32, count: u32) -> std::result::Result<String, JsValue> {
    torus_json(a.into(), b.into(), c.into(), d.into(), count as usize).map_err(js_err)
}

#[wasm_bindgen]
pub fn torsion_curve(a: i32, b: i32, c: i32, d: i32, samples: u32) -> std::result::Result<String, JsValue> {
    torsion_json(a.into(), b.into(), c.into(), d.into(), samples as usize).map_err(js_err)
}
