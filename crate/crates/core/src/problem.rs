//! JSON problem descriptions and verification reports.
//!
//! A [`ProblemInput`] names one of four input kinds plus optional
//! truncation order, growth horizon and holonomies. [`run`] computes every
//! applicable closed form, expands it, and checks each identity against an
//! independent route, recording the verdicts in the report.
//!
//! Serialization is canonical: exact rationals are `"p/q"` strings (or
//! `"p"`), big integers are decimal strings, struct fields are emitted in
//! declaration order and maps in key order, so equal inputs give
//! byte-identical reports.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::algebra::{format_rational, zeta_series_from_counts, IntegerMatrix, Rational, RationalFunction};
use crate::asymptotics::{asymptotic_invariant, torus_entropy, GrowthEstimate, GrowthSource};
use crate::error::{Error, Result};
use crate::homology::{euler_symplectic_zeta, lefschetz_numbers, lefschetz_zeta, GradedHomologyAction};
use crate::periodic::{
    divisors, expand_counts, expand_cyclotomic, p_coefficients_moebius, p_coefficients_recursive, periodic_zeta,
    prime_period_form, NielsenData,
};
use crate::subshift::{
    brute_force_count, subshift_zeta, trace_count, trace_formula_sequence, EnumerationCaps, Sign, SignedSubshiftFamily,
    Subshift,
};
use crate::torsion::{relative_difference, torsion_direct, torsion_via_zeta, UnitHolonomy};
use crate::torus::{count_fixed_points_on_grid, nielsen_numbers, sign_data, torus_zeta, TorusMap};
use crate::{DEFAULT_HORIZON, DEFAULT_ORDER};

pub const MAX_ORDER: usize = 512;
pub const MAX_HORIZON: u64 = 10_000;
/// Relative tolerance for the two torsion routes.
pub const TORSION_TOLERANCE: f64 = 1e-12;
/// Tolerance of the entropy / asymptotic-invariant comparison.
pub const IVANOV_TOLERANCE: f64 = 1e-3;
/// Iterates checked by the fixed-point grid oracle.
pub const GRID_ORACLE_ITERATES: u64 = 6;
pub const GRID_ORACLE_MAX_DENOMINATOR: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PieceInput {
    pub matrix: Vec<Vec<i64>>,
    pub sign: i8,
}

/// Divisor-indexed counts. JSON object keys are decimal strings; they are
/// emitted in numeric order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivisorCounts(pub BTreeMap<u64, u64>);

impl Serialize for DivisorCounts {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.0.iter().map(|(k, v)| (k.to_string(), v)))
    }
}

impl<'de> Deserialize<'de> for DivisorCounts {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(deserializer)?;
        raw.into_iter()
            .map(|(k, v)| {
                k.trim()
                    .parse::<u64>()
                    .map(|d| (d, v))
                    .map_err(|_| serde::de::Error::custom(format!("count key {k:?} is not a positive integer")))
            })
            .collect::<std::result::Result<_, _>>()
            .map(DivisorCounts)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Payload {
    Homology {
        matrices: Vec<Vec<Vec<i64>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        surface: Option<bool>,
    },
    Torus {
        matrix: Vec<Vec<i64>>,
    },
    Periodic {
        period: u64,
        counts: DivisorCounts,
    },
    Subshift {
        pieces: Vec<PieceInput>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemInput {
    #[serde(flatten)]
    pub payload: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<UnitHolonomy>>,
}

const COMMON_KEYS: [&str; 4] = ["kind", "order", "horizon", "lambda"];

fn payload_keys(kind: &str) -> Option<&'static [&'static str]> {
    Some(match kind {
        "homology" => &["matrices", "surface"],
        "torus" => &["matrix"],
        "periodic" => &["period", "counts"],
        "subshift" => &["pieces"],
        _ => return None,
    })
}

impl ProblemInput {
    /// Parses and validates a problem description. Unknown keys are schema
    /// violations.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
        Self::from_value(value)
    }

    pub fn from_value(value: Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidInput("problem must be a JSON object".into()))?;
        let kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::InvalidInput("missing string field \"kind\"".into()))?;
        let allowed = payload_keys(kind).ok_or_else(|| {
            Error::InvalidInput(format!(
                "unknown kind {kind:?}; expected one of \"homology\", \"torus\", \"periodic\", \"subshift\""
            ))
        })?;
        if let Some(k) = obj
            .keys()
            .find(|k| !COMMON_KEYS.contains(&k.as_str()) && !allowed.contains(&k.as_str()))
        {
            return Err(Error::InvalidInput(format!("unknown field {k:?} for kind {kind:?}")));
        }
        let input: Self =
            serde_json::from_value(value).map_err(|e| Error::InvalidInput(format!("schema violation: {e}")))?;
        input.validate()?;
        Ok(input)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(k) = self.order {
            if k == 0 || k > MAX_ORDER {
                return Err(Error::InvalidInput(format!(
                    "order must be in 1..={MAX_ORDER}, got {k}"
                )));
            }
        }
        if let Some(h) = self.horizon {
            if !(crate::asymptotics::MIN_HORIZON..=MAX_HORIZON).contains(&h) {
                return Err(Error::InvalidInput(format!(
                    "horizon must be in {}..={MAX_HORIZON}, got {h}",
                    crate::asymptotics::MIN_HORIZON
                )));
            }
        }
        // the domain constructors are the payload schema
        Problem::build(&self.payload).map(|_| ())
    }

    pub fn order(&self) -> usize {
        self.order.unwrap_or(DEFAULT_ORDER)
    }

    pub fn horizon(&self) -> u64 {
        self.horizon.unwrap_or(DEFAULT_HORIZON)
    }
}

enum Problem {
    Homology(GradedHomologyAction),
    Torus(TorusMap),
    Periodic(NielsenData),
    Subshift(SignedSubshiftFamily),
}

fn matrix(rows: &[Vec<i64>]) -> Result<IntegerMatrix> {
    IntegerMatrix::from_rows(rows.to_vec())
}

impl Problem {
    fn build(payload: &Payload) -> Result<Self> {
        Ok(match payload {
            Payload::Homology { matrices, surface } => {
                let ms = matrices.iter().map(|m| matrix(m)).collect::<Result<Vec<_>>>()?;
                if surface.unwrap_or(false) {
                    Problem::Homology(GradedHomologyAction::surface(ms)?)
                } else {
                    Problem::Homology(GradedHomologyAction::new(ms)?)
                }
            }
            Payload::Torus { matrix: m } => Problem::Torus(TorusMap::new(matrix(m)?)?),
            Payload::Periodic { period, counts } => Problem::Periodic(NielsenData::new(
                *period,
                counts.0.iter().map(|(&d, &n)| (d, BigInt::from(n))).collect(),
            )?),
            Payload::Subshift { pieces } => Problem::Subshift(SignedSubshiftFamily::new(
                pieces
                    .iter()
                    .map(|p| Ok((Subshift::new(matrix(&p.matrix)?)?, Sign::try_from(p.sign)?)))
                    .collect::<Result<Vec<_>>>()?,
            )?),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub max_deviation: f64,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, max_deviation: f64, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            max_deviation,
            detail: detail.into(),
        }
    }

    fn exact(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self::new(name, passed, if passed { 0.0 } else { 1.0 }, detail)
    }

    fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Skipped,
            max_deviation: 0.0,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalFunctionJson {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub text: String,
}

impl From<&RationalFunction> for RationalFunctionJson {
    fn from(r: &RationalFunction) -> Self {
        Self {
            numerator: r.numerator().coeffs().iter().map(format_rational).collect(),
            denominator: r.denominator().coeffs().iter().map(format_rational).collect(),
            text: r.to_pretty(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorsionValue {
    pub lambda: UnitHolonomy,
    pub direct: Option<f64>,
    pub via_zeta: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignDataJson {
    pub r: u32,
    pub p: u32,
    pub sigma: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Results {
    Homology {
        lefschetz_numbers: Vec<String>,
        lefschetz_zeta: RationalFunctionJson,
        series: Vec<String>,
        torsion: Vec<TorsionValue>,
    },
    Torus {
        hyperbolic: bool,
        sign_data: SignDataJson,
        nielsen_numbers: Vec<String>,
        lefschetz_numbers: Vec<String>,
        zeta: RationalFunctionJson,
        lefschetz_zeta: RationalFunctionJson,
        series: Vec<String>,
        entropy: f64,
        asymptotic_invariant: GrowthEstimate,
        torsion: Vec<TorsionValue>,
    },
    Periodic {
        counts: Vec<String>,
        p_coefficients: BTreeMap<u64, String>,
        factors: BTreeMap<u64, String>,
        zeta_text: String,
        prime_period_form: Option<String>,
        series: Vec<String>,
        asymptotic_invariant: GrowthEstimate,
    },
    Subshift {
        trace_formula: Vec<String>,
        piece_traces: Vec<Vec<String>>,
        zeta: RationalFunctionJson,
        series: Vec<String>,
        asymptotic_invariant: GrowthEstimate,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: ProblemInput,
    pub order: usize,
    pub horizon: u64,
    pub results: Results,
    pub verification: Vec<Check>,
    pub conjectures: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.verification.iter().all(|c| c.status != Status::Fail)
    }

    /// Canonical pretty-printed JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn series_check(name: &str, closed: &crate::algebra::FormalPowerSeries, counts: &[BigInt]) -> Check {
    let from_counts = zeta_series_from_counts(counts);
    let dev = closed.max_abs_diff(&from_counts);
    Check::new(
        name,
        closed == &from_counts,
        dev,
        format!("exact coefficient match to order {}", counts.len()),
    )
}

fn torsion_block(
    action: &GradedHomologyAction,
    lambdas: &[UnitHolonomy],
    checks: &mut Vec<Check>,
) -> Vec<TorsionValue> {
    let mut out = Vec::new();
    for &l in lambdas {
        let label = format!("lambda=({}, {})", l.re(), l.im());
        let direct = torsion_direct(action, l);
        let via = torsion_via_zeta(action, l);
        match (&direct, &via) {
            (Ok(d), Ok(z)) => {
                let dev = relative_difference(*d, *z);
                checks.push(Check::new(
                    "torsion_direct_equals_zeta_special_value",
                    dev <= TORSION_TOLERANCE,
                    dev,
                    label.clone(),
                ));
                let conj = torsion_direct(action, l.conj());
                let cdev = conj
                    .as_ref()
                    .map(|c| relative_difference(*d, *c))
                    .unwrap_or(f64::INFINITY);
                checks.push(Check::new(
                    "torsion_conjugation_symmetry",
                    cdev <= TORSION_TOLERANCE,
                    cdev,
                    label.clone(),
                ));
                checks.push(Check::exact("torsion_positive", *d > 0.0 && *z > 0.0, label.clone()));
            }
            (Err(e), _) => {
                checks.push(Check::skipped(
                    "torsion_direct_equals_zeta_special_value",
                    format!("{label}: {e}"),
                ));
            }
            (Ok(_), Err(e)) => {
                checks.push(Check::new(
                    "torsion_direct_equals_zeta_special_value",
                    false,
                    f64::INFINITY,
                    format!("{label}: acyclic but zeta route failed: {e}"),
                ));
            }
        }
        let error = direct.as_ref().err().or(via.as_ref().err()).map(ToString::to_string);
        out.push(TorsionValue {
            lambda: l,
            direct: direct.ok(),
            via_zeta: via.ok(),
            error,
        });
    }
    out
}

fn char_poly_checks(action: &GradedHomologyAction) -> Check {
    let ok = action.matrices().iter().all(|m| {
        let p = m.reversed_char_poly();
        p.coeff(0).is_one()
            && p.coeff(1) == -Rational::from_integer(m.trace())
            && p.degree().is_none_or(|d| d <= m.dim())
    });
    Check::exact(
        "reversed_char_poly_normalization",
        ok,
        "constant term 1, linear term -trace, degree <= dim",
    )
}

fn homology_report(action: &GradedHomologyAction, order: usize, lambdas: &[UnitHolonomy]) -> (Results, Vec<Check>) {
    let mut checks = Vec::new();
    let counts = lefschetz_numbers(action, order);
    let zeta = lefschetz_zeta(action);
    let series = zeta.expand(order);
    checks.push(series_check("lefschetz_zeta_series_identity", &series, &counts));
    checks.push(Check::exact(
        "euler_symplectic_zeta_equals_lefschetz_zeta",
        euler_symplectic_zeta(action) == zeta,
        "closed forms identical",
    ));
    checks.push(char_poly_checks(action));
    let is_identity = action.matrices().iter().all(|m| *m == IntegerMatrix::identity(m.dim()));
    if is_identity {
        let chi = BigInt::from(action.euler_characteristic());
        checks.push(Check::exact(
            "identity_lefschetz_equals_euler_characteristic",
            counts.first() == Some(&chi),
            format!("chi = {chi}"),
        ));
    }
    let torsion = torsion_block(action, lambdas, &mut checks);
    (
        Results::Homology {
            lefschetz_numbers: strings(&counts),
            lefschetz_zeta: (&zeta).into(),
            series: series.to_strings(),
            torsion,
        },
        checks,
    )
}

fn torus_report(t: &TorusMap, order: usize, horizon: u64, lambdas: &[UnitHolonomy]) -> Result<(Results, Vec<Check>)> {
    let mut checks = Vec::new();
    let sd = sign_data(t)?;
    let action = t.homology_action();
    let nielsen = nielsen_numbers(t, order)?;
    let lefschetz = lefschetz_numbers(&action, order);

    let signed_ok = nielsen.iter().zip(&lefschetz).enumerate().all(|(i, (n, l))| {
        let exponent = sd.r as u64 + sd.p as u64 * (i as u64 + 1);
        let sign = if exponent.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        *n == sign * l
    });
    checks.push(Check::exact(
        "nielsen_equals_signed_lefschetz",
        signed_ok,
        format!("N = (-1)^(r+pn) L for n = 1..={order}"),
    ));

    let zeta = torus_zeta(t)?;
    let series = zeta.expand(order);
    checks.push(series_check("torus_zeta_series_identity", &series, &nielsen));
    checks.push(Check::exact(
        "nielsen_numbers_positive",
        nielsen.iter().all(|n| n.is_positive()),
        format!("n = 1..={order}"),
    ));

    let mut grid_checked = Vec::new();
    let mut grid_ok = true;
    for n in 1..=GRID_ORACLE_ITERATES.min(order as u64) {
        match count_fixed_points_on_grid(t, n, GRID_ORACLE_MAX_DENOMINATOR) {
            Ok(c) => {
                grid_ok &= BigInt::from(c) == nielsen[n as usize - 1];
                grid_checked.push(n);
            }
            Err(Error::ResourceLimit(_)) => break,
            Err(e) => return Err(e),
        }
    }
    if grid_checked.is_empty() {
        checks.push(Check::skipped(
            "fixed_point_grid_oracle",
            "denominator above enumeration cap",
        ));
    } else {
        checks.push(Check::exact(
            "fixed_point_grid_oracle",
            grid_ok,
            format!("n = 1..={}", grid_checked.last().unwrap()),
        ));
    }

    let entropy = torus_entropy(t)?;
    let growth = asymptotic_invariant(GrowthSource::Torus(t), horizon)?;
    let gap = entropy - growth.log_value();
    checks.push(Check::new(
        "ivanov_entropy_bound",
        gap >= -IVANOV_TOLERANCE,
        gap.min(0.0).abs(),
        format!("h >= log F_inf - {IVANOV_TOLERANCE} at horizon {horizon}"),
    ));
    checks.push(Check::new(
        "entropy_equals_log_asymptotic_invariant",
        gap.abs() < IVANOV_TOLERANCE,
        gap.abs(),
        format!("|h - log F_inf| < {IVANOV_TOLERANCE} at horizon {horizon}"),
    ));

    let torsion = torsion_block(&action, lambdas, &mut checks);
    Ok((
        Results::Torus {
            hyperbolic: t.is_hyperbolic(),
            sign_data: SignDataJson {
                r: sd.r,
                p: sd.p,
                sigma: sd.sigma,
            },
            nielsen_numbers: strings(&nielsen),
            lefschetz_numbers: strings(&lefschetz),
            zeta: (&zeta).into(),
            lefschetz_zeta: (&lefschetz_zeta(&action)).into(),
            series: series.to_strings(),
            entropy,
            asymptotic_invariant: growth,
            torsion,
        },
        checks,
    ))
}

fn periodic_report(d: &NielsenData, order: usize, horizon: u64) -> Result<(Results, Vec<Check>)> {
    let mut checks = Vec::new();
    let rec = p_coefficients_recursive(d);
    let mob = p_coefficients_moebius(d);
    checks.push(Check::exact(
        "moebius_recursion_matches_explicit_sum",
        rec == mob,
        "P(d) for every divisor d",
    ));
    let round_trip = divisors(d.period()).into_iter().all(|n| {
        let s: BigInt = divisors(n).into_iter().map(|e| rec[&e].clone()).sum();
        &s == d.count(n)
    });
    checks.push(Check::exact(
        "moebius_inversion_round_trip",
        round_trip,
        "sum of P over divisors of d equals N_d",
    ));

    let zeta = periodic_zeta(d)?;
    let series = expand_cyclotomic(&zeta, order);
    let counts = expand_counts(d, order);
    checks.push(series_check("cyclotomic_series_identity", &series, &counts));

    let prime_form = prime_period_form(d);
    if let Some(form) = &prime_form {
        checks.push(Check::exact(
            "prime_period_corollary",
            form.as_product() == zeta,
            form.to_pretty(),
        ));
    }

    let growth = asymptotic_invariant(GrowthSource::Periodic(d), horizon)?;
    checks.push(Check::new(
        "periodic_growth_exactly_one",
        growth.value == 1.0,
        (growth.value - 1.0).abs(),
        "bounded count sequence",
    ));

    Ok((
        Results::Periodic {
            counts: strings(&counts),
            p_coefficients: rec.iter().map(|(k, v)| (*k, v.to_string())).collect(),
            factors: zeta.factors().iter().map(|(k, v)| (*k, format_rational(v))).collect(),
            zeta_text: zeta.to_pretty(),
            prime_period_form: prime_form.map(|f| f.to_pretty()),
            series: series.to_strings(),
            asymptotic_invariant: growth,
        },
        checks,
    ))
}

fn subshift_report(f: &SignedSubshiftFamily, order: usize, horizon: u64) -> Result<(Results, Vec<Check>)> {
    let mut checks = Vec::new();
    let caps = EnumerationCaps::default();
    let max_n = (order as u64).min(caps.max_length);
    let mut piece_traces = Vec::new();
    for (i, (s, _)) in f.pieces().iter().enumerate() {
        let traces: Vec<BigInt> = (1..=order as u64).map(|n| trace_count(s, n)).collect();
        if s.alphabet_size() > caps.max_alphabet {
            checks.push(Check::skipped(
                "trace_equals_enumeration",
                format!(
                    "piece {i}: alphabet {} above cap {}",
                    s.alphabet_size(),
                    caps.max_alphabet
                ),
            ));
        } else {
            let mut ok = true;
            for n in 1..=max_n {
                let oracle = brute_force_count(s, n, caps)?;
                ok &= BigInt::from(oracle) == traces[n as usize - 1];
            }
            checks.push(Check::exact(
                "trace_equals_enumeration",
                ok,
                format!("piece {i}, n = 1..={max_n}"),
            ));
        }
        piece_traces.push(strings(&traces));
    }
    let counts = trace_formula_sequence(f, order);
    let zeta = subshift_zeta(f);
    let series = zeta.expand(order);
    checks.push(series_check("subshift_zeta_series_identity", &series, &counts));
    let growth = asymptotic_invariant(GrowthSource::Subshift(f), horizon)?;
    checks.push(Check::exact(
        "growth_at_least_one",
        growth.value >= 1.0,
        format!("horizon {horizon}"),
    ));
    Ok((
        Results::Subshift {
            trace_formula: strings(&counts),
            piece_traces,
            zeta: (&zeta).into(),
            series: series.to_strings(),
            asymptotic_invariant: growth,
        },
        checks,
    ))
}

/// Computes the full report for a validated input.
pub fn run(input: &ProblemInput) -> Result<Report> {
    input.validate()?;
    let order = input.order();
    let horizon = input.horizon();
    let lambdas = input.lambda.clone().unwrap_or_default();
    let mut conjectures = Vec::new();
    let (results, verification) = match Problem::build(&input.payload)? {
        Problem::Homology(a) => homology_report(&a, order, &lambdas),
        Problem::Torus(t) => torus_report(&t, order, horizon, &lambdas)?,
        Problem::Periodic(d) => periodic_report(&d, order, horizon)?,
        Problem::Subshift(f) => {
            conjectures.push(
                "The identification of this zeta product with the Floer-dimension zeta function of a \
                 pseudo-Anosov mapping class is conjectural; only the subshift identity is verified."
                    .to_string(),
            );
            subshift_report(&f, order, horizon)?
        }
    };
    Ok(Report {
        input: input.clone(),
        order,
        horizon,
        results,
        verification,
        conjectures,
    })
}

/// Parses, applies command-line overrides, and runs.
pub fn run_json(text: &str, order: Option<usize>, horizon: Option<u64>) -> Result<Report> {
    let mut input = ProblemInput::from_json(text)?;
    if order.is_some() {
        input.order = order;
    }
    if horizon.is_some() {
        input.horizon = horizon;
    }
    run(&input)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_torus_example() {
        let input = ProblemInput::from_json(r#"{"kind":"torus","matrix":[[2,1],[1,1]]}"#).unwrap();
        assert_eq!(
            input.payload,
            Payload::Torus {
                matrix: vec![vec![2, 1], vec![1, 1]]
            }
        );
        assert_eq!(input.order(), 32);
        assert_eq!(input.horizon(), 60);
    }

    #[test]
    fn schema_violations() {
        for bad in [
            r#"[1,2]"#,
            r#"{"matrix":[[2,1],[1,1]]}"#,
            r#"{"kind":"sphere"}"#,
            r#"{"kind":"torus","matrix":[[2,1],[1,1]],"extra":1}"#,
            r#"{"kind":"torus","matrix":[[2,1],[1,1]],"order":0}"#,
            r#"{"kind":"torus","matrix":[[2,1],[1,1]],"order":513}"#,
            r#"{"kind":"torus","matrix":[[2,1],[1,1]],"horizon":10001}"#,
            r#"{"kind":"torus","matrix":[[2,1],[1,0]]}"#,
            r#"{"kind":"torus","matrix":[[2,1],[1,1]],"lambda":[{"re":1.0,"im":1.0}]}"#,
            r#"{"kind":"periodic","period":6,"counts":{"1":1,"2":2}}"#,
            r#"{"kind":"subshift","pieces":[{"matrix":[[2]],"sign":1}]}"#,
            r#"{"kind":"subshift","pieces":[{"matrix":[[1]],"sign":0}]}"#,
            r#"{"kind":"homology","matrices":[[[1]],[[1,0]]]}"#,
            r#"{"kind":"homology","matrices":[[[1]],[[1]]],"surface":true}"#,
        ] {
            assert!(
                matches!(
                    ProblemInput::from_json(bad),
                    Err(Error::InvalidInput(_) | Error::Dimension(_))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn non_hyperbolic_torus_is_a_domain_error() {
        let input = ProblemInput::from_json(r#"{"kind":"torus","matrix":[[1,1],[0,1]]}"#).unwrap();
        assert!(matches!(run(&input), Err(Error::Domain(_))));
    }

    #[test]
    fn echo_round_trips() {
        let text = r#"{"kind":"periodic","period":3,"counts":{"1":1,"3":4},"order":10,"lambda":[{"re":0.0,"im":1.0}]}"#;
        let report = run_json(text, None, None).unwrap();
        let echoed = serde_json::to_string(&report.input).unwrap();
        assert_eq!(ProblemInput::from_json(&echoed).unwrap(), report.input);
    }

    #[test]
    fn overrides_apply() {
        let report = run_json(
            r#"{"kind":"torus","matrix":[[2,1],[1,1]],"order":5}"#,
            Some(7),
            Some(20),
        )
        .unwrap();
        assert_eq!(report.order, 7);
        assert_eq!(report.horizon, 20);
    }

    #[test]
    fn homology_report_with_torsion() {
        let text = r#"{"kind":"homology","matrices":[[[1]],[[2,1],[1,1]],[[1]]],"surface":true,
                      "lambda":[{"re":-1.0,"im":0.0},{"re":0.0,"im":1.0},{"re":1.0,"im":0.0}]}"#;
        let report = run_json(text, None, None).unwrap();
        assert!(report.all_passed(), "{}", report.to_json());
        let Results::Homology {
            torsion,
            lefschetz_zeta,
            ..
        } = &report.results
        else {
            panic!()
        };
        assert_eq!(lefschetz_zeta.text, "(1 - 3z + z^2) / (1 - 2z + z^2)");
        assert!((torsion[0].direct.unwrap() - 0.8).abs() < 1e-12);
        assert!((torsion[1].via_zeta.unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!(torsion[2].error.is_some());
        assert!(report.verification.iter().any(|c| c.status == Status::Skipped));
    }

    #[test]
    fn identity_action_reports_euler_characteristic() {
        let report = run_json(
            r#"{"kind":"homology","matrices":[[[1]],[[1,0],[0,1]],[[1]]]}"#,
            None,
            None,
        )
        .unwrap();
        assert!(report
            .verification
            .iter()
            .any(|c| c.name == "identity_lefschetz_equals_euler_characteristic" && c.status == Status::Pass));
    }

    #[test]
    fn large_alphabet_skips_enumeration() {
        let row = vec![1i64; 7];
        let input = ProblemInput {
            payload: Payload::Subshift {
                pieces: vec![PieceInput {
                    matrix: vec![row; 7],
                    sign: 1,
                }],
            },
            order: Some(8),
            horizon: Some(10),
            lambda: None,
        };
        let report = run(&input).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.verification[0].status, Status::Skipped);
        assert_eq!(report.conjectures.len(), 1);
    }
}
