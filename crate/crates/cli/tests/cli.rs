mod common;

use common::*;
use serde_json::Value;

#[test]
fn annihilator_summary_and_json_agree() {
    let run = apolar(&["annihilator", "--form", "x0*x1^2*x2^3"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("Hilbert function: 1 3 5 6 5 3 1"));
    assert!(run.stdout.contains("length: 24"));
    let (code, v, _) = json(&["annihilator", "--form", "x0*x1^2*x2^3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["length"], 24);
    assert_eq!(v["results"]["generator_degrees"], serde_json::json!([2, 3, 4]));
    assert_eq!(v["input"]["nvars"], 3);
}

#[test]
fn nvars_override_adds_variables() {
    let (_, v, _) = json(&["annihilator", "--form", "x0*x2"]);
    assert_eq!(v["input"]["nvars"], 3);
    let (_, v, _) = json(&["annihilator", "--form", "x0*x2", "--nvars", "4"]);
    let gens: Vec<String> = v["results"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["polynomial"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(gens, ["y1", "y3", "y0^2", "y2^2"]);
    let (code, v, _) = json(&["annihilator", "--form", "x0*x2", "--nvars", "2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "VariableOutOfRange");
}

#[test]
fn json_file_is_written_next_to_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let run = apolar(&["rank-bound", "--form", "x0^2 + x1^2 + x2^2", "--json", path.to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("cactus rank >= 5/2 (so >= 3)"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"]["bound_exact"], "5/2");
    assert_eq!(v["results"]["bound_ceiling"], 3);
}

#[test]
fn prime_fields() {
    let (code, v, _) = json(&["annihilator", "--form", "x0^7 + x1^7", "--field", "Fp:7"]);
    assert_eq!(code, 0);
    assert_eq!(v["field"], "Fp:7");
    assert_eq!(v["results"]["length"], 14);
    let (code, v, _) = json(&["annihilator", "--form", "x0", "--field", "Fp:8"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "NotPrime");
    let (code, v, _) = json(&["annihilator", "--form", "x0", "--field", "GF7"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "Parse");
    let (code, v, _) = json(&["annihilator", "--form", "1/7*x0", "--field", "Fp:7"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "DivisionByZero");
}

#[test]
fn errors_go_to_stderr() {
    let run = apolar(&["rank-bound", "--form", "x0 + x1^2"]);
    assert_eq!(run.code, 3);
    assert!(run.stdout.is_empty());
    assert!(run.stderr.contains("NonHomogeneous"));
    let run = apolar(&["rank-bound", "--form", "0"]);
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("ZeroForm"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(apolar(&["verify", "--form", "x0"]).code, 2);
    assert_eq!(apolar(&["monomial", "--exponents", "1,a"]).code, 2);
    assert_eq!(apolar(&["certify", "-n", "1", "-d", "0"]).code, 2);
    assert_eq!(apolar(&["frobnicate"]).code, 2);
}

#[test]
fn monomial_edge_cases() {
    let (code, v, _) = json(&["monomial", "--exponents", "0,0"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "AllZeroExponents");
    let (code, v, _) = json(&["monomial", "--exponents", "3,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["exponents"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["results"]["cactus_rank"], 6);
    assert_eq!(v["results"]["ci_degree"], 6);
    assert!(v["results"]["waring_rank"].is_null());
}

#[test]
fn certify_over_prime_fields() {
    let (code, v, _) = json(&["certify", "-n", "1", "-d", "3", "--field", "Fp:5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["rank"], 4);
    assert_eq!(v["results"]["root_of_unity"], "2");
    assert_eq!(strings(&v["results"]["decomposition"]["points"]), ["1:1", "1:2", "1:4", "1:3"]);
    let (code, v, _) = json(&["certify", "-n", "1", "-d", "3", "--field", "Fp:7"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["hint"], "try Fp:5");
}

#[test]
fn verify_points_file_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pts");
    let p = path.to_str().unwrap();
    std::fs::write(&path, "1:0:0\n0:1:0  # second\n\n0:0:1\n").unwrap();
    let (code, v, _) = json(&["verify", "--form", "x0^2 + x1^2 + x2^2", "--points", p]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["apolar"], true);
    assert_eq!(strings(&v["results"]["decomposition"]["coefficients"]), ["1", "1", "1"]);

    std::fs::write(&path, "1:0:0\n0:1:0\n").unwrap();
    let (code, v, _) = json(&["verify", "--form", "x0^2 + x1^2 + x2^2", "--points", p]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["apolar"], false);

    std::fs::write(&path, "1:0\n").unwrap();
    let (code, v, _) = json(&["verify", "--form", "x0*x1*x2", "--points", p]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "ArityMismatch");

    std::fs::write(&path, "1:1\n1:1/0\n").unwrap();
    let (code, v, _) = json(&["verify", "--form", "x0*x1", "--points", p]);
    assert_eq!(code, 2);
    assert!(v["error"]["message"].as_str().unwrap().contains("line 2"));

    let (code, v, _) = json(&["verify", "--form", "x0*x1", "--points", "/nonexistent/points"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "ReadInput");
}

#[test]
fn verify_ideal_reports_each_generator() {
    let (code, v, _) = json(&["verify", "--form", "x0*x1", "--ideal", "y0^2; y1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["apolar"], false);
    let checks = v["results"]["ideal"].as_array().unwrap();
    assert_eq!(checks[0]["annihilates"], true);
    assert_eq!(checks[1]["annihilates"], false);
    let (code, _, _) = json(&["verify", "--form", "x0*x1", "--ideal", "x0"]);
    assert_eq!(code, 2);
}
