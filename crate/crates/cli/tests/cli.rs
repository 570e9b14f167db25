use std::process::{Command, Output};

use serde_json::Value;

fn tropic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropic")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = tropic(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn mlen_of_g() {
    let v = json(&["mlen", "1*x*y^-1 + 1*y^-2 + 1*x^-1*y^-1 + 1 + y"]);
    assert_eq!(v, serde_json::json!({ "mlen": 5 }));
}

#[test]
fn lengths_of_quotients_are_pairs() {
    assert_eq!(json(&["mlen", "(x + y + 0) / (x + y)"])["mlen"], serde_json::json!([3, 2]));
    assert_eq!(json(&["flen", "(x + 0)*(y + 0) / (x + y + 0)"])["flen"], serde_json::json!([3, 3]));
}

#[test]
fn regions_with_oracle() {
    let v = json(&["regions", "--oracle", "x + y + 0", "0 + 1*x*y + -1*x*y^2"]);
    assert_eq!(v["formula"], 8);
    assert_eq!(v["oracle"], 8);
}

#[test]
fn flen_balancings_of_four_rays() {
    let fan = r#"{"base":["0","0"],"rays":[["2","1"],["-1","2"],["-3","-1"],["1","-3"]]}"#;
    let v = json(&["balancefan", "--length", "flen", fan]);
    assert_eq!(v["count"], 15);
    let mlen = json(&["balancefan", fan]);
    assert_eq!(mlen["mlen"], 5);
}

#[test]
fn one_dimensional_minimal_representation() {
    let f = r#"{"breakpoints":[{"location":"0","magnitude":"2","kind":"convex"}],"anchor_x":"1","anchor_value":"1","anchor_slope":"1"}"#;
    let v = json(&["min1d", f]);
    assert_eq!(v["mlen"], serde_json::json!([2, 1]));
}

#[test]
fn evaluation_is_exact() {
    let v = json(&["eval", "(x + 0)*(y + 0) / (x + y + 0)", "2,1/3"]);
    assert_eq!(v["value"], "1/3");
}

#[test]
fn input_errors_exit_with_two() {
    let out = tropic(&["mlen", "x + * y"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "parse");
    let out = tropic(&["balancefan", r#"{"base":["0","0"],"rays":[["1","0"],["-1","0"]]}"#]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "not_completely_unbalanced");
}

#[test]
fn curve_output_reparses_and_draws() {
    let dir = std::env::temp_dir().join(format!("tropic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("curve.svg");
    let out = tropic(&["curve", "--svg", svg.to_str().unwrap(), "x + y + 0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let back = json(&["canonical", text.trim()]);
    assert_eq!(back["flen"], 4);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn inputs_from_files() {
    let dir = std::env::temp_dir().join(format!("tropic-cli-files-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let list = dir.join("curves.txt");
    std::fs::write(&list, "x + y + 0\n0 + 1*x*y + -1*x*y^2\n").unwrap();
    let v = json(&["bounds", list.to_str().unwrap()]);
    assert_eq!(v["mlen"], 8);
    assert_eq!(v["generic"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn witness_lengths() {
    let v = json(&["witness"]);
    assert_eq!(v["mlen_y1"], 5);
    assert_eq!(v["flen_y2"], 4);
    assert_eq!(v["lengths_cross"], true);
}

#[test]
fn verify_all_passes() {
    let a = tropic(&["verify-all"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["criteria"].as_array().unwrap().len(), 12);
    assert!(v["criteria"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
