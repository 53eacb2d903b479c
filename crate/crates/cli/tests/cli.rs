use std::process::{Command, Output};

use qskein::tail::TailSeries;
use qskein::{ExpansionTerm, LaurentPoly, RationalFn};
use serde_json::Value;

fn qskein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qskein"))
        .args(args)
        .env_remove("QSKEIN_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qskein(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn envelope(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).expect("valid JSON envelope")
}

#[test]
fn qint_and_delta_text() {
    assert_eq!(stdout(&["delta", "--n", "1"]), "-A^2 - A^-2");
    assert_eq!(stdout(&["qint", "--n", "0"]), "0");
    assert_eq!(stdout(&["qint", "--n", "3"]), "A^4 + 1 + A^-4");
    assert_eq!(stdout(&["qint", "--n", "-2"]), "-A^2 - A^-2");
}

#[test]
fn json_envelope_shape() {
    let v = envelope(&["delta", "--n", "2"]);
    assert_eq!(v["command"], "delta");
    assert_eq!(v["params"]["n"], 2);
    assert_eq!(v["format_version"], "1");
    let p: LaurentPoly = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(p, qskein::quantum::delta(2));
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qskein"))
        .args(["qint", "--n", "2"])
        .env("QSKEIN_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "qint");
}

#[test]
fn bubble_expansion_and_single_coefficient() {
    let text = stdout(&["bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1"]);
    assert_eq!(text.lines().count(), 2);
    assert_eq!(stdout(&["bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1", "--i", "7"]), "0");

    let v = envelope(&["bubble", "--m", "2", "--n", "3", "--k", "3", "--l", "2"]);
    let terms: Vec<ExpansionTerm> = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(terms.len(), 3);
    let rec = envelope(&["bubble", "--m", "2", "--n", "3", "--k", "3", "--l", "2", "--method", "recursive"]);
    assert_eq!(v["result"], rec["result"]);

    let one = envelope(&["bubble", "--m", "2", "--n", "3", "--k", "3", "--l", "2", "--i", "1", "--method", "quantum"]);
    let c: RationalFn = serde_json::from_value(one["result"].clone()).unwrap();
    assert_eq!(c, terms[1].coeff);
}

#[test]
fn bubble_constraint_violation_exits_2() {
    let out = qskein(&["bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1", "--m-prime", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m+k = m'+l"));
    let out = qskein(&["bubble", "--m", "1", "--n", "1", "--k", "1", "--l", "1", "--method", "magic"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn theta_values() {
    assert_eq!(stdout(&["theta", "--m", "0", "--n", "0", "--k", "3"]), stdout(&["delta", "--n", "3"]));
    assert_eq!(stdout(&["theta", "--m", "1", "--n", "1", "--k", "0"]), stdout(&["delta", "--n", "2"]));
    assert_eq!(
        stdout(&["theta", "--m", "1", "--n", "1", "--k", "1"]),
        "(-A^10 - A^6 - 2A^2 - A^-2 - A^-6)/(A^4 + 1)"
    );
}

#[test]
fn tail_output() {
    assert_eq!(stdout(&["tail85", "--terms", "6"]), "1 - 2q + q^2 - 2q^4 + 3q^5");
    assert_eq!(stdout(&["tail85", "--terms", "1"]), "1");
    assert!(stdout(&["tail85", "--terms", "121"]).ends_with("- 324q^120"));
    assert_eq!(qskein(&["tail85", "--terms", "0"]).status.code(), Some(2));

    let v = envelope(&["tail85", "--terms", "40", "--method", "double-sum"]);
    let t: TailSeries = serde_json::from_value(v["result"].clone()).unwrap();
    let w = envelope(&["tail85", "--terms", "40"]);
    let u: TailSeries = serde_json::from_value(w["result"].clone()).unwrap();
    assert_eq!(t.terms, u.terms);
}

#[test]
fn state_sum_output() {
    assert_eq!(stdout(&["sbsum", "--n", "0"]), "1");
    let v = envelope(&["sbsum", "--n", "1"]);
    let r: RationalFn = serde_json::from_value(v["result"]["value"].clone()).unwrap();
    assert_eq!(r, qskein::tail::sb_state_sum(1).unwrap().value);
    assert_eq!(qskein(&["sbsum", "--n", "-1"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = qskein(&["verify", "--suite", "bubble", "--max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));
    assert_eq!(qskein(&["verify", "--suite", "unknown"]).status.code(), Some(2));
    let v = envelope(&["verify", "--suite", "tail", "--max", "30"]);
    assert!(v["result"]["properties"].as_array().unwrap().iter().all(|p| p["passed"] == true));
}

#[test]
fn missing_arguments_exit_2() {
    assert_eq!(qskein(&["theta", "--m", "1"]).status.code(), Some(2));
    assert_eq!(qskein(&[]).status.code(), Some(2));
}
