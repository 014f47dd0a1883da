use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drinfeld"))
        .args(args)
        .env_remove("DRINFELD_FORMAT")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    let s = String::from_utf8(out.stdout.clone()).unwrap();
    serde_json::from_str(&s).unwrap_or_else(|e| panic!("bad json {s:?}: {e}"))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

/// Nonzero coefficients as (exponent, numerator coefficients, denominator coefficients).
fn support(series: &Value) -> Vec<(usize, Value, Value)> {
    series["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .enumerate()
        .filter(|(_, c)| c["num"]["coeffs"].as_array().is_some_and(|a| !a.is_empty()))
        .map(|(n, c)| (n, c["num"]["coeffs"].clone(), c["den"]["coeffs"].clone()))
        .collect()
}

#[test]
fn theta_of_u_is_u_squared() {
    let out = run(&["theta", "--q", "2", "--r", "1", "--input", r#"{"coeffs":[0,1]}"#]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    let s = &v["output"]["series"];
    assert_eq!(support(s), vec![(2, serde_json::json!([1]), serde_json::json!([1]))]);
}

#[test]
fn g1_is_one_mod_bracket() {
    let out = run(&["gd", "--q", "3", "--d", "1", "--trunc", "20", "--reduce-mod", "bracket:1"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    let coeffs = v["series"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 20);
    assert_eq!(coeffs[0]["coeffs"], serde_json::json!([1]));
    assert!(coeffs[1..].iter().all(|c| c["coeffs"].as_array().unwrap().is_empty()));
}

#[test]
fn goss_suite_passes() {
    let out = run(&["check", "--suite", "goss", "--q", "3", "--k", "25"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json_of(&out)["passed"], Value::Bool(true));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["theta", "--r"])), 64);
    assert_eq!(code(&run(&["nonsense"])), 64);
    assert_eq!(code(&run(&["eis", "--k", "2", "--trunc", "0"])), 64);
    assert_eq!(code(&run(&["goss", "--lattice", "torus"])), 64);
    assert_eq!(code(&run(&["theta", "--r", "1", "--input", "{not json"])), 64);
    assert_eq!(code(&run(&["check", "--suite", "nope"])), 64);
    assert_eq!(code(&run(&["--help"])), 0);
    // k = 3 is not divisible by q - 1 = 2
    assert_eq!(code(&run(&["eis", "--q", "3", "--k", "3"])), 1);
    assert_eq!(code(&run(&["eis", "--k", "2", "--prime", "[0,0,1]"])), 1);
    // a deliberately wrong schedule is reported as a failed check
    let out = run(&["vadic", "converge", "--q", "3", "--i-max", "1", "--schedule", "1,100", "--padic-prec", "10"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json_of(&out)["failing"], serde_json::json!(1));
}

#[test]
fn json_round_trips() {
    let out = run(&["eis", "--q", "3", "--k", "4", "--trunc", "12"]);
    let raw = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(format!("{v}\n"), raw);
    // the emitted series is accepted as input and comes back unchanged
    let series = v["series"].to_string();
    let back = json_of(&run(&["theta", "--q", "3", "--r", "0", "--input", &series]));
    assert_eq!(back["output"]["series"], v["series"]);
}

#[test]
fn deterministic_output() {
    let args = ["check", "--suite", "hecke", "--q", "2", "--k", "6", "--trunc", "10", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_drinfeld"))
        .args(["false-e", "--q", "2", "--trunc", "5"])
        .env("DRINFELD_FORMAT", "text")
        .output()
        .unwrap();
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("falseE (weight 2"), "{s}");
    assert!(s.contains("O(u^5)"));
}

#[test]
fn hecke_on_constants() {
    // T_θ(1) = θ^k in weight k
    let out = run(&["hecke", "--q", "3", "--op", "T", "--ell", "theta", "--input", r#"{"coeffs":[1]}"#, "--weight", "2"]);
    assert_eq!(code(&out), 0);
    let v = json_of(&out);
    assert_eq!(support(&v["output"]["series"]), vec![(0, serde_json::json!([0, 0, 1]), serde_json::json!([1]))]);
    let out = run(&["hecke", "--op", "T", "--ell", "theta", "--input", r#"{"coeffs":[1]}"#]);
    assert_eq!(code(&out), 64);
}

#[test]
fn goss_methods_agree() {
    for lattice in ["carlitz", "division:[0,1]", "basis:[1]", "finite:[1,{\"num\":{\"coeffs\":[1]},\"den\":{\"coeffs\":[0,1]}}]"] {
        let out = run(&["goss", "--q", "2", "--k", "9", "--lattice", lattice, "--method", "all"]);
        assert_eq!(code(&out), 0, "{lattice}");
        assert_eq!(json_of(&out)["rows"].as_array().unwrap().len(), 9);
    }
}

#[test]
fn carlitz_outputs() {
    let v = json_of(&run(&["carlitz", "--q", "2", "--what", "action", "--a", "theta"]));
    assert_eq!(v["tau"].as_array().unwrap().len(), 2);
    let v = json_of(&run(&["carlitz", "--q", "2", "--what", "u-a", "--a", "[1]", "--trunc", "6"]));
    assert_eq!(v["coeffs"][1]["coeffs"], serde_json::json!([1]));
    let v = json_of(&run(&["carlitz", "--q", "3", "--what", "zeta", "--k", "2"]));
    assert!(v["zeta_ratio"]["den"].is_object());
    assert_eq!(code(&run(&["carlitz", "--what", "action"])), 64);
}

#[test]
fn vadic_commands() {
    let v = json_of(&run(&["vadic", "pow-s", "--q", "3", "--a", "[1,1]", "--k", "5", "--padic-prec", "4"]));
    assert_eq!(v["prec"], serde_json::json!(4));
    // (1 + θ)^5 mod θ^4 = 1 + 5θ + 10θ² + 10θ³ = 1 + 2θ + θ² + θ³
    assert_eq!(v["value"]["coeffs"], serde_json::json!([1, 2, 1, 1]));

    let out = run(&["vadic", "e-decomp", "--q", "3", "--trunc", "27", "--j", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["identity_holds"], Value::Bool(true));
    assert_eq!(code(&run(&["vadic", "e-decomp", "--q", "3", "--trunc", "28", "--j", "3"])), 1);

    let out = run(&["vadic", "family", "--q", "3", "--prime", "[1,1]", "--x", "1", "--y", "0", "--n", "1", "--trunc", "10"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["hypotheses"], Value::Bool(true));

    let out = run(&["vadic", "converge", "--q", "3", "--experiment", "boost", "--i-max", "2", "--trunc", "12", "--padic-prec", "12"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["ok"], Value::Bool(true));
}

#[test]
fn serre_weight_bookkeeping() {
    let v = json_of(&run(&["serre", "--q", "3", "--r", "2", "--form", "eis:4", "--trunc", "10"]));
    assert_eq!(v["output"]["weight"], serde_json::json!(8));
    assert_eq!(v["output"]["type"], serde_json::json!(0));
    assert_eq!(code(&run(&["serre", "--r", "1", "--input", r#"{"coeffs":[0,1]}"#])), 64);
}
