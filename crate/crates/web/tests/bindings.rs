use serde_json::Value;
use zeta_web::{analyze_json, torsion_json, torus_json, MAX_POINTS};

#[test]
fn torus_summary_for_cat_map() {
    let v: Value = serde_json::from_str(&torus_json(2, 1, 1, 1, 6).unwrap()).unwrap();
    assert_eq!(v["hyperbolic"], true);
    assert_eq!(v["trace"], "3");
    assert_eq!(v["nielsen"], serde_json::json!(["1", "5", "16", "45", "121", "320"]));
    assert_eq!(v["zeta"], "(1 - 2z + z^2) / (1 - 3z + z^2)");
    assert_eq!(v["sign"], serde_json::json!([1, 0, 1]));
    assert!((v["entropy"].as_f64().unwrap() - 0.962_423_650_119_206_9).abs() < 1e-9);
    assert_eq!(v["log_rates"][0], 0.0);
}

#[test]
fn torus_summary_for_non_hyperbolic_map() {
    let v: Value = serde_json::from_str(&torus_json(1, 1, 0, 1, 5).unwrap()).unwrap();
    assert_eq!(v["hyperbolic"], false);
    assert!(v["zeta"].is_null());
    assert_eq!(v["nielsen"], serde_json::json!([]));
}

#[test]
fn torus_rejects_bad_input() {
    assert!(torus_json(2, 0, 0, 1, 5).is_err());
    assert!(torus_json(2, 1, 1, 1, 0).is_err());
    assert!(torus_json(2, 1, 1, 1, MAX_POINTS + 1).is_err());
}

#[test]
fn torsion_curve_routes_agree() {
    let v: Value = serde_json::from_str(&torsion_json(2, 1, 1, 1, 64).unwrap()).unwrap();
    let pts = v.as_array().unwrap();
    assert_eq!(pts.len(), 64);
    for p in pts {
        let d = p["direct"].as_f64().unwrap();
        let z = p["via_zeta"].as_f64().unwrap();
        assert!((d - z).abs() <= 1e-12 * d.max(z));
    }
    // a single sample lands on θ = π
    let half: Value = serde_json::from_str(&torsion_json(2, 1, 1, 1, 1).unwrap()).unwrap();
    assert!((half[0]["direct"].as_f64().unwrap() - 0.8).abs() < 1e-12);
}

#[test]
fn analyze_matches_core_report() {
    let text = r#"{"kind":"periodic","period":3,"counts":{"1":1,"3":4}}"#;
    let out = analyze_json(text).unwrap();
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["verification"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));
    assert!(analyze_json("{\"kind\":\"torus\"}").is_err());
}
