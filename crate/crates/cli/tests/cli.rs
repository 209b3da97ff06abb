use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ytl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ytl"))
        .args(args)
        .output()
        .expect("failed to run ytl")
}

fn json(args: &[&str]) -> Value {
    let out = ytl(args);
    assert!(
        out.status.success(),
        "ytl {args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn check_golden(args: &[&str], file: &str) {
    let out = ytl(args);
    assert!(out.status.success());
    let got = String::from_utf8(out.stdout).unwrap();
    assert_eq!(got.trim(), golden(file).trim(), "output of {args:?} differs from {file}");
}

#[test]
fn golden_outputs() {
    check_golden(&["dims", "--d", "1", "--n", "5"], "dims_1_5.json");
    check_golden(&["zcount", "--n", "4"], "zcount_4.json");
    check_golden(&["lr", "--lambda", "2,1", "--mu", "2,1"], "lr_21_21.json");
    check_golden(&["restrict", "--lambda", "1,1;1"], "restrict_11_1.json");
}

#[test]
fn dims_temperley_lieb_case() {
    let v = json(&["dims", "--d", "1", "--n", "5"]);
    assert_eq!(v["formula"], 42);
    assert_eq!(v["sum_of_squares"], 42);
    assert_eq!(v["verdict"], "MATCH");
}

#[test]
fn dims_large_values_are_exact() {
    let v = json(&["dims", "--d", "5", "--n", "30"]);
    assert_eq!(v["verdict"], "MATCH");
    let digits = v["formula"].to_string();
    assert!(digits.chars().all(|c| c.is_ascii_digit()), "{digits}");
    assert!(digits.len() > 16);
}

#[test]
fn zcount_row_four() {
    let v = json(&["zcount", "--n", "4"]);
    assert_eq!(v["z"], serde_json::json!([1, 3, 5, 5]));
    assert_eq!(v["sum"], 14);
    assert_eq!(v["top"], 5);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["verdict"], "MATCH", "{c}");
    }
}

#[test]
fn lr_single_coefficient() {
    let v = json(&["lr", "--lambda", "2,1", "--mu", "3,2,1", "--nu", "4,3,2"]);
    assert_eq!(v["coefficient"], 2);
    let v = json(&["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"]);
    assert_eq!(v["coefficient"], 2);
    let v = json(&["lr", "--lambda", "2", "--mu", "2", "--nu", "2,1,1"]);
    assert_eq!(v["coefficient"], 0);
}

#[test]
fn restrict_reports_membership() {
    let v = json(&["restrict", "--lambda", "2,1;;1"]);
    assert_eq!(v["is_ytl_label"], false);
    assert_eq!(v["max_first_part"], 3);
    let v = json(&["restrict", "--lambda", ";1,1,1"]);
    assert_eq!(v["is_ytl_label"], true);
    assert_eq!(v["summands"], serde_json::json!([{ "multiplicity": 1, "nu": [1, 1, 1] }]));
}

#[test]
fn pieri_counts() {
    let v = json(&["pieri", "--mu", "1;", "--l", "1"]);
    assert_eq!(v["summands"].as_array().unwrap().len(), 3);
}

#[test]
fn irreps_counts() {
    let v = json(&["irreps", "--d", "3", "--n", "4"]);
    let members = v["members"].as_array().unwrap();
    assert_eq!(v["count"], members.len());
    assert_eq!(
        v["one_component"].as_u64().unwrap() + v["two_columns"].as_u64().unwrap(),
        members.len() as u64
    );
    let squares: u64 = members.iter().map(|m| m["dimension"].as_u64().unwrap().pow(2)).sum();
    let dims = json(&["dims", "--d", "3", "--n", "4"]);
    assert_eq!(dims["formula"].as_u64().unwrap(), squares);
}

#[test]
fn basis_json_and_csv_agree() {
    let v = json(&["basis", "--d", "2", "--n", "3"]);
    assert_eq!(v["size"], 28);
    assert_eq!(v["elements"].as_array().unwrap().len(), 28);
    let out = ytl(&["basis", "--d", "2", "--n", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r1,r2,r3,pattern"));
    assert_eq!(lines.count(), 28);
}

#[test]
fn verify_small_case_passes() {
    let v = json(&["verify", "--d", "2", "--n", "3", "--u-eval", "3/2", "--route", "literal"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["u_values"][0], "3/2");
    for run in v["quotient_dimension"]["runs"].as_array().unwrap() {
        assert_eq!(run["quotient_dimension"], 28);
    }
}

#[test]
fn verify_symbolic_relations() {
    let v = json(&["verify", "--d", "1", "--n", "3", "--symbolic"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["symbolic"], true);
    assert_eq!(v["defining_relations"]["passed"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(ytl(&["dims", "--d", "2"]).status.code(), Some(2));
    assert_eq!(ytl(&["lr", "--lambda", "1,2", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(ytl(&["verify", "--d", "2", "--n", "3", "--u-eval", "-1"]).status.code(), Some(2));
    assert_eq!(ytl(&["verify", "--d", "2", "--n", "3", "--u-eval", "0"]).status.code(), Some(2));
    assert_eq!(ytl(&["verify", "--d", "2", "--n", "3", "--u-eval", "x/2"]).status.code(), Some(2));
    assert_eq!(ytl(&["basis", "--d", "2", "--n", "2"]).status.code(), Some(2));
    assert_eq!(ytl(&["zcount", "--n", "0"]).status.code(), Some(2));
    let out = ytl(&["basis", "--d", "0", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["irreps", "--d", "3", "--n", "5"][..],
        &["basis", "--d", "2", "--n", "4", "--format", "csv"][..],
        &["verify", "--d", "1", "--n", "4", "--seed", "11"][..],
    ] {
        let a = ytl(args);
        let b = ytl(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
