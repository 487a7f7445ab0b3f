use std::process::{Command, Output};

use serde_json::Value;

use weighted_blowup::blowup;
use weighted_blowup::monomial::Monomial;
use weighted_blowup::weighted::{power_equality, weighted_ideal, Weight};

fn wblowup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wblowup"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = wblowup(&full);
    let doc = serde_json::from_slice(&out.stdout).expect("valid JSON");
    (doc, out.status.code().expect("exit code"))
}

#[test]
fn wt_of_example_monomial() {
    let (doc, code) = json(&["wt", "--weight", "10,14,35", "x1^5*x2^4*x3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "wt");
    assert_eq!(doc["result"], 141);
    assert!(doc["error"].is_null());
}

#[test]
fn normality_verdict_matches_library() {
    let args = ["normality", "--weight", "10,14,35", "--L", "70", "--d", "2"];
    let (doc, code) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(doc["result"], "NOT_EQUAL");

    let w = Weight::new(vec![10, 14, 35]).unwrap();
    let verdict = power_equality(&w, 70, 2).unwrap();
    let expected: Vec<String> = verdict
        .witnesses()
        .iter()
        .map(Monomial::to_string)
        .collect();
    let got: Vec<String> = doc["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert_eq!(got, expected);
    assert_eq!(got, ["x1^5*x2^4*x3"]);

    let mut strict = vec!["--strict"];
    strict.extend_from_slice(&args);
    assert_eq!(json(&strict).1, 1);
}

#[test]
fn normality_index_search() {
    let (doc, code) = json(&[
        "normality",
        "--weight",
        "1,1,3",
        "--d-max",
        "4",
        "--L-max",
        "10",
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["normality_index"], 3);

    let args = [
        "--strict",
        "normality",
        "--weight",
        "10,14,35",
        "--d-max",
        "2",
        "--L-max",
        "70",
    ];
    let (doc, code) = json(&args);
    assert!(doc["result"]["normality_index"].is_null());
    assert_eq!(code, 1);
}

#[test]
fn ideal_generators_match_library() {
    let (doc, _) = json(&["ideal", "--weight", "1,1,2", "--d", "2"]);
    let w = Weight::new(vec![1, 1, 2]).unwrap();
    let expected: Vec<Value> = weighted_ideal(&w, 2)
        .generators()
        .iter()
        .map(|g| Value::String(g.to_string()))
        .collect();
    assert_eq!(doc["result"]["generators"], Value::Array(expected));
}

#[test]
fn padded_weight_uses_n() {
    let (doc, _) = json(&["ideal", "--weight", "1,2", "--n", "4", "--d", "2"]);
    assert_eq!(doc["inputs"]["n"], 4);
    assert_eq!(doc["inputs"]["weight"], serde_json::json!([1, 2, 0, 0]));
}

#[test]
fn profile_document() {
    let (doc, code) = json(&["profile", "--n", "3", "--r", "1", "--b", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["tau"], "3/2");
    assert_eq!(doc["result"]["discrepancy"], 3);
    assert_eq!(doc["result"]["center_codim"], 3);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 11);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn charts_document() {
    let (doc, _) = json(&["charts", "--weight", "10,14,35"]);
    let w = Weight::new(vec![10, 14, 35]).unwrap();
    assert_eq!(doc["result"]["cartier_index"], blowup::cartier_index(&w));
    let charts = doc["result"]["charts"].as_array().unwrap();
    assert_eq!(charts.len(), 3);
    assert_eq!(charts[2]["quotient"], "1/35(25,21,1)");
}

#[test]
fn terminal_quotients() {
    let (doc, code) = json(&["--strict", "terminal", "--order", "2", "--twists", "1,1"]);
    assert_eq!(doc["result"]["terminal"], false);
    assert_eq!(code, 1);
    let (doc, _) = json(&["terminal", "--order", "5", "--twists", "-1,1,1"]);
    assert_eq!(doc["result"]["terminal"], true);
    let (doc, _) = json(&["terminal", "--weight", "1,1,2"]);
    assert_eq!(doc["result"]["terminal"], true);
}

#[test]
fn symbolic_strict_inclusion() {
    let (doc, _) = json(&[
        "symbolic",
        "--ideal",
        "(x1^2, x1*x2)",
        "--n",
        "2",
        "--t",
        "2",
    ]);
    assert_eq!(doc["result"]["verdict"], "NOT_EQUAL");
    assert_eq!(doc["witnesses"], serde_json::json!(["x1^2"]));
    let (doc, _) = json(&["symbolic", "--weight", "1,1,2", "--L", "2", "--t", "3"]);
    assert_eq!(doc["result"]["verdict"], "EQUAL");
}

#[test]
fn push_membership() {
    let (doc, _) = json(&["push", "--weight", "1,2", "--d", "4", "x2^2 + x1^3*x2"]);
    assert_eq!(doc["result"], true);
    let (doc, _) = json(&["push", "--weight", "1,2", "--d", "4", "x2^2 + x1^3"]);
    assert_eq!(doc["result"], false);
}

#[test]
fn error_codes() {
    let cases: [(&[&str], &str); 4] = [
        (&["ideal", "--weight", "2,4", "--d", "3"], "WEIGHT_GCD"),
        (&["wt", "--weight", "1,2", "x1 +"], "PARSE_ERROR"),
        (&["wt", "--weight", "1,2", "x3"], "VARIABLE_OUT_OF_RANGE"),
        (
            &["symbolic", "--ideal", "(x1*x2)", "--n", "2", "--t", "2"],
            "RADICAL_NOT_PRIME",
        ),
    ];
    for (args, code) in cases {
        let (doc, exit) = json(args);
        assert_eq!(exit, 2, "{args:?}");
        assert_eq!(doc["error"]["code"], code, "{args:?}");
        assert!(doc["result"].is_null());
    }
}

#[test]
fn human_output() {
    let out = wblowup(&["wt", "--weight", "10,14,35", "x1^5*x2^4*x3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result: 141"));
    let out = wblowup(&["ideal", "--weight", "2,4", "--d", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(WEIGHT_GCD)"));
}
