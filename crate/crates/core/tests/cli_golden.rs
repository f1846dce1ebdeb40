use std::process::Command;

use serde_json::{json, Value};

fn taut(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_taut")).args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, doc)
}

fn ok(args: &[&str]) -> Value {
    let (code, doc) = taut(args);
    assert_eq!(code, 0, "{args:?}: {doc}");
    assert_eq!(doc["schema"], "taut/1");
    assert_eq!(doc["status"], "ok");
    doc["payload"].clone()
}

#[test]
fn classify_poincare() {
    let p = ok(&["classify", "2", "3", "5"]);
    assert_eq!(p, json!({"n": 2, "p": 3, "q": 5, "reason": "exception (v)", "verdict": "TotalLSpace"}));
    assert_eq!(ok(&["classify", "7", "2", "3"])["verdict"], "Excellent");
}

#[test]
fn decide_reports_first_witness() {
    let p = ok(&["seifert", "decide", "M(-1; 1/2, 1/3, 1/8)"]);
    assert_eq!(p["horizontal"], true);
    assert_eq!(p["condition"], 2);
    assert_eq!((p["m"].clone(), p["a"].clone()), (json!(5), json!(2)));
    assert_eq!(p["excellence"]["verdict"], "Excellent");
}

#[test]
fn continued_fractions() {
    assert_eq!(ok(&["cf", "eval", "[2,-2]"])["value"], "3/2");
    let (code, doc) = taut(&["cf", "expand", "7/3", "--policy", "even"]);
    assert_eq!(code, 1);
    assert_eq!(doc["payload"]["code"], "exact-arith/no-even-expansion");
}

#[test]
fn homology_routes_agree() {
    let p = ok(&["seifert", "h1", "M(0; 1/2, 1/2)"]);
    assert_eq!((p["h1"].clone(), p["h1_snf"].clone()), (json!(4), json!(4)));
}

#[test]
fn sign_survivors() {
    let p = ok(&["lo", "check", "builtin:twobridge:1,1,4"]);
    assert_eq!(p["obstructed"], false);
    assert_eq!(p["survivors"], json!(["++--", "+--+", "-++-", "--++"]));
    assert_eq!(ok(&["lo", "check", "builtin:pretzel:1,1,1"])["obstructed"], true);
}

#[test]
fn domain_errors_exit_one() {
    let (code, doc) = taut(&["classify", "2", "4", "6"]);
    assert_eq!(code, 1);
    assert_eq!(doc["status"], "error");
    assert_eq!(doc["payload"]["code"], "torus-covers/invalid-query");
    let (code, doc) = taut(&["surgery", "1", "2", "3", "6/1"]);
    assert_eq!(code, 1);
    assert_eq!(doc["payload"]["code"], "torus-link-surgery/fiber-slope-filling");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(taut(&["bogus"]).0, 2);
    assert_eq!(taut(&["classify", "2"]).0, 2);
}
