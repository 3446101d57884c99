use std::process::{Command, Output};

use serde_json::Value;

fn dimreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dimreg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn num(v: &Value) -> f64 {
    v.as_f64().expect("number")
}

#[test]
fn verify_passes_on_default_grid() {
    let out = dimreg(&[
        "verify",
        "--m",
        "1",
        "--eps",
        "0.2,0.1,0.05,0.025",
        "--tol-limit",
        "1e-3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["pass"], Value::Bool(true));
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.iter().filter(|e| e["kind"] == "diagram").count(), 8);
    assert_eq!(
        entries.iter().filter(|e| e["kind"] == "integral").count(),
        12
    );
}

#[test]
fn verify_scales_with_mass() {
    let out = dimreg(&["verify", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let d7 = doc["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "d7_local")
        .unwrap();
    assert_eq!(num(&d7["exact_limit"]), -1.0 / 16.0);
}

#[test]
fn single_eps_is_rejected() {
    let out = dimreg(&["verify", "--m", "1", "--eps", "0.2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at least 3"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_flags_exit_nonzero() {
    for args in [
        &["verify", "--m", "abc"][..],
        &["verify", "--eps", "0.2,0.2,0.1"],
        &["verify", "--tol-quadrature", "1e-2"],
        &["verify", "--format", "xml"],
        &["verify", "--m", "-1"],
        &["energy", "--order", "3"],
        &["frobnicate"],
    ] {
        let out = dimreg(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failing_tolerance_gives_exit_one() {
    let out = dimreg(&["verify", "--tol-limit", "1e-7"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], Value::Bool(false));
}

#[test]
fn integral_command() {
    let out = dimreg(&["integral", "delta_4", "--m", "1", "--eps", "0.05"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let e = &doc["entries"][0];
    assert_eq!(num(&e["exact_limit"]), 0.03125);
    let q = num(&e["quadrature"][0]["value"]);
    let a = num(&e["quadrature"][0]["analytic"]);
    assert!((q - 0.03125).abs() < 0.006 && (a - 0.03125).abs() < 0.001);

    let out = dimreg(&["integral", "i_singular", "--m", "1", "--eps", "0.1"]);
    let v = num(&json(&out)["entries"][0]["quadrature"][0]["value"]);
    assert!(v.is_finite() && (v + 0.0625).abs() < 0.005);
}

#[test]
fn unknown_integral_lists_tags() {
    let out = dimreg(&["integral", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("delta_sq") && err.contains("omitted_term"));
}

#[test]
fn energy_command() {
    let cases = [
        (
            &["energy", "--g", "1", "--m", "1", "--order", "2"][..],
            0.8125,
        ),
        (&["energy", "--g", "0", "--m", "5", "--order", "2"], 2.5),
        (
            &["energy", "--g", "0.5", "--m", "2", "--order", "2"],
            1.1328125,
        ),
    ];
    for (args, want) in cases {
        let out = dimreg(args);
        assert_eq!(out.status.code(), Some(0));
        assert!(
            (num(&json(&out)["energy"]) - want).abs() < 1e-12,
            "{args:?}"
        );
    }
}

#[test]
fn diagram_command_and_csv() {
    let out = dimreg(&["diagram", "d13_watermelon_grad", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("kind,name,eps"));
    // four samples and a limit row
    assert_eq!(lines.len(), 6);
    assert!(lines[5].contains(",limit,") && lines[5].ends_with("true"));
    let out = dimreg(&["diagram", "d99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_verify_has_limit_rows() {
    let out = dimreg(&["verify", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(",limit,")).count(), 25);
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |t: &str| {
        Command::new(env!("CARGO_BIN_EXE_dimreg"))
            .arg("verify")
            .env("DIMREG_THREADS", t)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("0"));
    assert_eq!(run("1"), run("3"));
}
