use std::process::{Command, Output};

use serde_json::{json, Value};

fn valspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_valspin"))
        .args(args)
        .output()
        .expect("spawn valspin")
}

fn stdout(args: &[&str]) -> String {
    let out = valspin(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    serde_json::from_str(&stdout(&a)).expect("one JSON document")
}

const E0: &str = "1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0";
const E1: &str = "0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0";
const E8: &str = "0,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0";

#[test]
fn valdim_row() {
    let out = stdout(&["valdim"]);
    let row = out.lines().nth(1).unwrap().split('|').nth(1).unwrap();
    assert_eq!(
        row.split_whitespace().collect::<Vec<_>>().join(" "),
        "1 1 2 3 6 10 15 20 27 20 15 10 6 3 2 1 1"
    );
    assert_eq!(stdout(&["valdim", "--k", "8"]).trim(), "27");
    assert_eq!(stdout(&["valdim", "--k", "17"]).trim(), "0");
}

#[test]
fn decompose_lambda2_json() {
    let doc = json(&["decompose", "--algebra", "B4", "--rep", "spin", "--k", "2"]);
    assert_eq!(
        doc["result"],
        json!({"k":2,"summands":[{"weight":["1","1","1","0"],"mult":1},{"weight":["1","1","0","0"],"mult":1}]})
    );
    assert_eq!(doc["command"], "decompose");
    assert_eq!(doc["inputs"]["k"], 2);
}

#[test]
fn decompose_so7_tangent() {
    let doc = json(&[
        "decompose",
        "--algebra",
        "B3",
        "--rep",
        "tangent",
        "--k",
        "2",
    ]);
    let weights: Vec<&Value> = doc["result"]["summands"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| &s["weight"])
        .collect();
    assert_eq!(
        weights,
        [
            &json!(["3/2", "1/2", "1/2"]),
            &json!(["1", "1", "0"]),
            &json!(["1", "0", "0"]),
            &json!(["1/2", "1/2", "1/2"])
        ][..]
    );
    assert_eq!(doc["result"]["summands"][1]["mult"], 2);
}

#[test]
fn op2_curvature_examples() {
    assert_eq!(
        stdout(&["curvature", "op2", "--u", E0, "--v", E1]).trim(),
        "4.0"
    );
    assert_eq!(
        stdout(&["curvature", "op2", "--u", E0, "--v", E8]).trim(),
        "1.0"
    );
    let doc = json(&["curvature", "op2", "--u", E0, "--v", E1]);
    assert_eq!(doc["result"].as_f64(), Some(4.0));
}

#[test]
fn tables_and_scalars() {
    assert_eq!(stdout(&["bk", "--k", "8"]).trim(), "1");
    assert_eq!(stdout(&["bkl", "--k", "4", "--l", "6"]).trim(), "88");
    let grid = json(&["bkl", "--full"]);
    assert_eq!(grid["result"].as_array().unwrap().len(), 16);
    assert_eq!(grid["result"][7][7], 266);
    let ascii = stdout(&["bkl"]);
    assert_eq!(ascii.lines().count(), 10);
    assert!(ascii.lines().last().unwrap().ends_with("266"));
}

#[test]
fn char_and_exterior() {
    let doc = json(&["char", "--weight", "1,0,0,0"]);
    assert_eq!(doc["result"]["dimension"], 9);
    let doc = json(&["exterior", "--rep", "spin", "--k", "4"]);
    assert_eq!(doc["result"]["dimension"], 1820);
    let out = stdout(&["char", "--algebra", "B3", "--weight", "[1,0,0]"]);
    assert!(out.starts_with("Char(Γ[1,0,0]) over B3 (dimension 7"));
}

#[test]
fn checks_pass() {
    for space in ["cpn", "hpn", "op2"] {
        let doc = json(&["check", space, "--samples", "20", "--seed", "3"]);
        assert_eq!(doc["result"]["passed"], true, "{space}");
    }
    assert!(stdout(&["check", "op2"]).contains("2/2 planes pass"));
}

#[test]
fn exit_statuses() {
    assert_eq!(valspin(&["nonsense"]).status.code(), Some(2));
    assert_eq!(valspin(&["valdim", "--k", "x"]).status.code(), Some(2));
    assert_eq!(
        valspin(&["--algebra", "B5", "valdim"]).status.code(),
        Some(2)
    );
    assert_eq!(
        valspin(&["char", "--weight", "1/2,1,0,0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        valspin(&["curvature", "op2", "--u", "1,0", "--v", "0,1"])
            .status
            .code(),
        Some(1)
    );
    let out = valspin(&["curvature", "op2", "--u", E0, "--v", E0]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);
    assert!(out.stdout.is_empty());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["report"][..],
        &["--json", "decompose", "--k", "8"],
        &["--json", "check", "hpn"],
    ] {
        assert_eq!(valspin(args).stdout, valspin(args).stdout, "{args:?}");
    }
}
