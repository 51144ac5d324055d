use std::path::Path;
use std::process::{Command, Output};

use projquant::json;
use projquant::rational::{int, rat};
use projquant::{Polynomial, Weights};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projquant")).args(args).output().unwrap()
}

fn write_input(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const SQUARE: &str = r#"{"connection": {"n": 2}, "symbol": {"delta": "0", "deg2": {"1,1": [{"exp": [2, 0], "coef": "1"}]}}}"#;

#[test]
fn coeffs_prints_exact_fractions() {
    let o = bin(&["coeffs", "--n", "2", "--lambda", "1/2", "--mu", "1/2"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "alpha=1/2 beta1=1 beta2=3/16 beta3=9/16\n");
}

#[test]
fn coeffs_at_resonance_lists_cases() {
    let o = bin(&["coeffs", "--lambda", "0", "--mu", "4/3"]);
    assert!(o.status.success());
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("resonant") && out.contains("case 2") && out.contains("case 3"), "{out}");
}

#[test]
fn quantize_constant_symbol() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(
        dir.path(),
        "in.json",
        r#"{"connection": {"n": 2}, "symbol": {"delta": "0", "deg2": {"1,1": [{"exp": [0, 0], "coef": "1"}]}}}"#,
    );
    let out = dir.path().join("out.json");
    let o = bin(&["quantize", "--in", &input, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let a = json::diffop_from_json(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(a.a2()[[0, 0]], Polynomial::one(2));
    assert!(a.a2()[[1, 1]].is_zero() && a.a1().iter().all(Polynomial::is_zero) && a.a0().is_zero());
}

#[test]
fn quantize_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(dir.path(), "in.json", SQUARE);
    let o = bin(&["quantize", "--in", &input, "--lambda", "1/2", "--mu", "1/2"]);
    assert!(o.status.success());
    let a = json::diffop_from_json(&String::from_utf8(o.stdout).unwrap()).unwrap();
    let x1 = Polynomial::var(2, 0).unwrap();
    assert_eq!(a.weights, Weights::new(rat(1, 2), rat(1, 2)));
    assert_eq!(a.a2()[[0, 0]], &x1 * &x1);
    assert_eq!(a.a1()[0], x1.scale(&int(2)));
    assert_eq!(a.a0(), &Polynomial::constant(2, rat(3, 8)));
}

#[test]
fn quantize_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(dir.path(), "in.json", SQUARE);
    // symbol has delta 0, weights give delta 1/2
    let o = bin(&["quantize", "--in", &input, "--lambda", "0", "--mu", "1/2"]);
    assert_eq!(o.status.code(), Some(2));

    let resonant = write_input(
        dir.path(),
        "res.json",
        r#"{"connection": {"n": 2}, "symbol": {"delta": "4/3", "deg2": {"1,1": [{"exp": [0, 0], "coef": "1"}]}}}"#,
    );
    let o = bin(&["quantize", "--in", &resonant, "--lambda", "0", "--mu", "4/3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--case"));
    let o = bin(&["quantize", "--in", &resonant, "--case", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let broken = write_input(dir.path(), "bad.json", r#"{"connection": {"n": 2}}"#);
    assert_eq!(bin(&["quantize", "--in", &broken]).status.code(), Some(2));
    assert_eq!(bin(&["quantize", "--in", "/nonexistent/x.json"]).status.code(), Some(2));
}

#[test]
fn verify_reproducible_and_passing() {
    let a = bin(&["verify", "--samples", "3", "--seed", "9"]);
    let b = bin(&["verify", "--samples", "3", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let reports: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let list = reports.as_array().unwrap();
    assert!(list.iter().all(|r| r["passed"] == true && r["seed"] == 9));
    let names: Vec<&str> = list.iter().map(|r| r["name"].as_str().unwrap()).collect();
    for prefix in ["invariance/", "flat-reduction", "sl-equivariance/", "table1/"] {
        assert!(names.iter().any(|n| n.starts_with(prefix)), "{prefix}");
    }
}

#[test]
fn verify_perturbation_fails_with_residual() {
    let o = bin(&["verify", "--suite", "invariance", "--perturb", "beta1", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let q2 = reports.as_array().unwrap().iter().find(|r| r["name"] == "invariance/q2").unwrap();
    assert_eq!(q2["passed"], false);
    let residual = serde_json::to_string(&q2["residual"]).unwrap();
    assert!(!json::diffop_from_json(&residual).unwrap().is_zero());
}

#[test]
fn verify_resonant_case_with_free_beta2() {
    let o = bin(&["verify", "--suite", "table1", "--case", "1", "--beta2", "7/3", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("table1/case1") && out.contains("beta2=7/3"));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = bin(&["verify", "--suite", "flat-reduction", "--samples", "2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.contains("\"flat-reduction\""));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bin(&["verify", "--perturb", "gamma"]).status.code(), Some(2));
    assert_eq!(bin(&["coeffs", "--mu", "abc"]).status.code(), Some(2));
    assert_eq!(bin(&[]).status.code(), Some(2));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}
