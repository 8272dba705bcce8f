//! Frozen reference values through the public API.

use num_bigint::BigInt;
use zeta_core::algebra::{zeta_series_from_counts, IntegerMatrix};
use zeta_core::homology::{lefschetz_numbers, lefschetz_zeta, GradedHomologyAction};
use zeta_core::periodic::{expand_cyclotomic, periodic_zeta, NielsenData};
use zeta_core::problem::{run, run_json, ProblemInput, Status};
use zeta_core::subshift::{subshift_zeta, trace_formula_sequence, SignedSubshiftFamily, Subshift};
use zeta_core::torus::{nielsen_numbers, torus_zeta, TorusMap};

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn fibonacci(count: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::from(0), BigInt::from(1)];
    while f.len() < count {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f
}

#[test]
fn cat_map_nielsen_numbers() {
    let t = TorusMap::from_i64([[2, 1], [1, 1]]).unwrap();
    let n = nielsen_numbers(&t, 32).unwrap();
    assert_eq!(strs(&n[..8]), ["1", "5", "16", "45", "121", "320", "841", "2205"]);
    assert_eq!(n[31].to_string(), "23725150497405");
    // |2 - L_{2n}| with Lucas numbers L
    let fib = fibonacci(70);
    for (i, x) in n.iter().enumerate() {
        let k = 2 * (i + 1);
        let lucas = &fib[k - 1] + &fib[k + 1];
        assert_eq!(*x, lucas - 2);
    }
}

#[test]
fn cat_map_zeta_series_is_even_fibonacci() {
    let t = TorusMap::from_i64([[2, 1], [1, 1]]).unwrap();
    let s = torus_zeta(&t).unwrap().expand(40);
    let fib = fibonacci(90);
    assert_eq!(s.coeff(0), &BigInt::from(1).into());
    for k in 1..=40 {
        assert_eq!(s.coeff(k), &fib[2 * k].clone().into(), "z^{k}");
    }
}

#[test]
fn negative_trace_map_frozen() {
    let t = TorusMap::from_i64([[-2, -1], [-1, -1]]).unwrap();
    let n = nielsen_numbers(&t, 8).unwrap();
    assert_eq!(strs(&n), ["5", "5", "20", "45", "125", "320", "845", "2205"]);
    let s = torus_zeta(&t).unwrap().expand(12);
    assert_eq!(
        s.to_strings(),
        ["1", "5", "15", "40", "105", "275", "720", "1885", "4935", "12920", "33825", "88555", "231840"]
    );
}

#[test]
fn golden_mean_counts_are_lucas_numbers() {
    let f = SignedSubshiftFamily::single(Subshift::from_i64([[1, 1], [1, 0]]).unwrap());
    let seq = trace_formula_sequence(&f, 32);
    assert_eq!(seq[31].to_string(), "4870847");
    let fib = fibonacci(40);
    for (i, x) in seq.iter().enumerate() {
        let n = i + 1;
        assert_eq!(*x, &fib[n - 1] + &fib[n + 1]);
    }
    // 1 / (1 - z - z^2) expands to F_{n+1}
    let s = subshift_zeta(&f).expand(30);
    for k in 0..=30 {
        assert_eq!(s.coeff(k), &fib[k + 1].clone().into());
    }
}

#[test]
fn periodic_prime_example() {
    let d = NielsenData::from_pairs(3, &[(1, 1), (3, 4)]).unwrap();
    let z = periodic_zeta(&d).unwrap();
    assert_eq!(z.to_pretty(), "(1 - z)^(-1) * (1 - z^3)^(-1)");
    // 1 / ((1 - z)(1 - z^3)) has coefficient floor(k/3) + 1
    let s = expand_cyclotomic(&z, 30);
    for k in 0..=30 {
        assert_eq!(s.coeff(k), &BigInt::from(k / 3 + 1).into());
    }
}

#[test]
fn genus_two_identity_action() {
    let a = GradedHomologyAction::identity(&[1, 4, 1]).unwrap();
    assert_eq!(a.euler_characteristic(), -2);
    let z = lefschetz_zeta(&a);
    assert_eq!(z.to_pretty(), "1 - 2z + z^2");
    assert_eq!(z.expand(16), zeta_series_from_counts(&lefschetz_numbers(&a, 16)));
}

#[test]
fn reports_for_sample_problems() {
    for (text, conjectures) in [
        (r#"{"kind":"torus","matrix":[[2,1],[1,1]],"order":16}"#, 0),
        (
            r#"{"kind":"periodic","period":6,"counts":{"1":2,"2":0,"3":5,"6":3}}"#,
            0,
        ),
        (
            r#"{"kind":"subshift","pieces":[{"matrix":[[1,1],[1,1]],"sign":1},{"matrix":[[1]],"sign":-1}]}"#,
            1,
        ),
        (
            r#"{"kind":"homology","matrices":[[[1]],[[2,1],[1,1]],[[1]]],"lambda":[{"re":-1,"im":0}]}"#,
            0,
        ),
    ] {
        let report = run_json(text, None, None).unwrap();
        assert!(report.all_passed(), "{text}");
        assert!(report.verification.iter().all(|c| c.status == Status::Pass), "{text}");
        assert_eq!(report.conjectures.len(), conjectures, "{text}");
        let json = report.to_json();
        let echoed: serde_json::Value = serde_json::from_str(&json).unwrap();
        let reparsed = ProblemInput::from_value(echoed["input"].clone()).unwrap();
        assert_eq!(reparsed, report.input);
        assert_eq!(run(&reparsed).unwrap().to_json(), json);
    }
}

#[test]
fn larger_matrices_stay_exact() {
    let m = IntegerMatrix::from_i64([[3, 2, 0], [1, 1, 1], [0, 1, 2]]);
    let a = GradedHomologyAction::new(vec![IntegerMatrix::identity(1), m]).unwrap();
    let counts = lefschetz_numbers(&a, 60);
    assert_eq!(lefschetz_zeta(&a).expand(60), zeta_series_from_counts(&counts));
    assert!(counts[59].bits() > 64);
}
