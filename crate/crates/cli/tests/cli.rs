use std::io::Write;
use std::process::{Command, Output, Stdio};

fn zeta(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zeta"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn zeta");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn reads_stdin_and_writes_stdout() {
    let out = zeta(&[], Some(r#"{"kind":"torus","matrix":[[2,1],[1,1]]}"#));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["results"]["zeta"]["text"], "(1 - 2z + z^2) / (1 - 3z + z^2)");
    assert_eq!(r["order"], 32);
}

#[test]
fn file_input_and_output_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("p.json");
    let output = dir.path().join("r.json");
    std::fs::write(&input, r#"{"kind":"periodic","period":2,"counts":{"1":0,"2":1}}"#).unwrap();
    let out = zeta(
        &[
            "--input",
            input.to_str().unwrap(),
            "--output",
            output.to_str().unwrap(),
            "--order",
            "4",
            "--horizon",
            "8",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(r["results"]["series"], serde_json::json!(["1", "0", "1/2", "0", "3/8"]));
    assert_eq!(r["results"]["factors"], serde_json::json!({"2": "-1/2"}));
    assert_eq!(r["horizon"], 8);
}

#[test]
fn input_errors_exit_one() {
    for bad in [
        "not json",
        r#"{"kind":"torus","matrix":[[1,1],[0,1]]}"#,
        r#"{"kind":"torus","matrix":[[2,1],[1,0]]}"#,
        r#"{"kind":"periodic","period":4,"counts":{"1":1,"4":2}}"#,
    ] {
        let out = zeta(&[], Some(bad));
        assert_eq!(out.status.code(), Some(1), "{bad}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
    let missing = zeta(&["--input", "/nonexistent/problem.json"], None);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn out_of_range_flags_are_input_errors() {
    let p = r#"{"kind":"torus","matrix":[[2,1],[1,1]]}"#;
    assert_eq!(zeta(&["--order", "600"], Some(p)).status.code(), Some(1));
    assert_eq!(zeta(&["--horizon", "2"], Some(p)).status.code(), Some(1));
}
