use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadfac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_of(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    (out.status.code().unwrap(), err)
}

#[test]
fn element_elasticity() {
    let v = json_of(&["--d=-14", "elasticity", "81"]);
    assert_eq!(v["elasticity"], json!({"num": 2, "den": 1}));
    assert_eq!(v["length_set"], json!([2, 4]));
}

#[test]
fn polynomial_elasticity() {
    let v = json_of(&["--d=-14", "poly-elasticity", "81*x"]);
    assert_eq!(v["elasticity"], json!({"num": 5, "den": 3}));
}

#[test]
fn psp_check() {
    let v = json_of(&["--d=-5", "psp-check", "2+(1+w)*x"]);
    assert_eq!(v["primitive"], json!(true));
    assert_eq!(v["superprimitive"], json!(false));
    assert_eq!(v["witness"], json!("(1-w)/2"));
}

#[test]
fn factor_schema() {
    let v = json_of(&["--d", "-14", "factor", "81"]);
    assert_eq!(v["element"], json!("81"));
    assert_eq!(v["d"], json!(-14));
    assert_eq!(
        v["factorizations"],
        json!([["3", "3", "3", "3"], ["5+2*w", "5-2*w"]])
    );
    assert_eq!(v["elasticity"], json!({"num": 2, "den": 1}));
    let v = json_of(&["--d=-5", "factor", "-w"]);
    assert_eq!(v["factorizations"], json!([["w"]]));
}

#[test]
fn polynomial_factorizations() {
    let v = json_of(&["--d=-5", "poly-factor", "4*x^2+4*x+6"]);
    assert_eq!(v["length_set"], json!([2]));
    assert_eq!(v["factorizations"].as_array().unwrap().len(), 2);
    let v = json_of(&["--d=-3", "irr", "x^2+x+1"]);
    assert_eq!(v["irreducible"], json!(true));
    let v = json_of(&["--d=-14", "irr", "81*x"]);
    assert_eq!(v["certificate"]["g"], json!("3"));
    assert_eq!(v["certificate"]["h"], json!("27*x"));
}

#[test]
fn other_commands() {
    let v = json_of(&["--d=-5", "ring-info"]);
    assert_eq!(v["class_number"], json!(2));
    let v = json_of(&["--d=-5", "kfactor", "2*x^2+2*x+3"]);
    assert_eq!(v["irreducible"], json!(false));
    let v = json_of(&["--d=-5", "gcd-v", "2", "1+w"]);
    assert_eq!(v["gcd"], Value::Null);
    let v = json_of(&["--d=-1", "gcd-v", "-2", "1+w"]);
    assert_eq!(v["gcd"], json!("1+w"));
    let v = json_of(&["--d=-5", "gamma-check", "<2; 1+w>", "<1; (1-w)/2>"]);
    assert_eq!(v["verdict"], json!("fails"));
    let v = json_of(&["--d=-3", "witness-p"]);
    assert_eq!(v["witness"], json!("x^2+x+1"));
    let v = json_of(&["--d=-1", "witness-p"]);
    assert_eq!(v["witness"], Value::Null);
    let v = json_of(&["--d=-14", "d1", "81+x^2"]);
    assert_eq!(v["elasticity"], json!({"num": 5, "den": 3}));
    let v = json_of(&["--d=-5", "d1", "x"]);
    assert_eq!(v["class"], json!({"kind": "not_atomic"}));
    let v = json_of(&["--d=-5", "d2-demo", "2", "5"]);
    assert_eq!(v["identity_ok"], json!(true));
    assert_eq!(v["lengths"], json!([2, 11]));
    assert_eq!(v["elasticity_lower_bound"], json!({"num": 11, "den": 2}));
    let v = json_of(&["--d=-14", "elasticity", "--norm-bound", "7000"]);
    assert_eq!(v["elasticity_lower_bound"], json!({"num": 2, "den": 1}));
}

#[test]
fn tsv_output() {
    let out = run(&["--d=-14", "factor", "81", "--format", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l == "elasticity\t{\"den\":1,\"num\":2}"));
}

#[test]
fn error_codes() {
    let (code, err) = error_of(&["--d=-5", "factor", "1/2"]);
    assert_eq!(
        (code, err["error"]["code"].as_str()),
        (2, Some("parse_error"))
    );
    let (code, err) = error_of(&["--d=3", "factor", "2"]);
    assert_eq!(
        (code, err["error"]["code"].as_str()),
        (3, Some("domain_error"))
    );
    let (code, _) = error_of(&["--d=-5", "factor", "1"]);
    assert_eq!(code, 3);
    let (code, err) = error_of(&["--d=-101", "ring-info"]);
    assert_eq!(
        (code, err["error"]["code"].as_str()),
        (4, Some("resource_error"))
    );
    let (code, _) = error_of(&["--d=-5", "irr", "x^7+1"]);
    assert_eq!(code, 4);
    let (code, _) = error_of(&["--d=-5", "nonsense"]);
    assert_eq!(code, 2);
    let (code, err) = error_of(&["--d=-5", "d1", "1/2+x"]);
    assert_eq!(code, 3);
    assert!(err["error"]["message"].as_str().unwrap().contains("x^0"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["--d=-3", "poly-factor", "4*x^2+4*x+4"]).stdout;
    let b = run(&["--d=-3", "poly-factor", "4*x^2+4*x+4"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn paper_suite_passes_and_is_reproducible() {
    let a = run(&["paper-suite", "--seed", "3"]);
    assert!(a.status.success());
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["all_pass"], json!(true));
    for e in v["entries"].as_array().unwrap() {
        assert!(!e["anchor"].as_str().unwrap().is_empty());
    }
    let b = run(&["paper-suite", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
}
