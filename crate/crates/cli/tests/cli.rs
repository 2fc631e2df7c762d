use std::process::{Command, Output};

use serde_json::Value;
use wreath_core::color_rules::defining_rule;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath-chars"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "wreath-chars/1");
    v
}

#[test]
fn fixed_point_cube() {
    let o = run(&["decompose", "--rule", "fxd", "--n", "5", "--m", "3", "--shape", "3,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "6");
    let v = json(&["decompose", "--rule", "fxd", "--n", "5", "--m", "3", "--shape", "3,2"]);
    assert_eq!(v["multiplicity"], "6");
}

#[test]
fn hyperoctahedral_table() {
    let v = json(&["chartable", "--n", "2", "--k", "2"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let classes = v["classes"].as_array().unwrap();
    let id = classes
        .iter()
        .position(|c| c == &serde_json::json!([[1, 1], []]))
        .unwrap();
    let mut degrees: Vec<String> = rows.iter().map(|r| r["values"][id].as_str().unwrap().to_string()).collect();
    degrees.sort();
    assert_eq!(degrees, vec!["1", "1", "1", "1", "2"]);
    assert_eq!(v["class_sizes"].as_array().unwrap().len(), 5);
}

#[test]
fn euler_mahonian_single_cell() {
    let v = json(&["euler-mahonian", "--n", "1", "--k", "1", "--tmax", "5"]);
    assert_eq!(v["shapes"]["[[1]]"]["numerator"], "1");
    assert_eq!(v["verified"], true);
}

#[test]
fn ehrhart_simplex() {
    let v = json(&["ehrhart", "--polytope", "simplex:2", "--weight", "1,2", "--dmax", "5"]);
    let series = v["series"].as_array().unwrap();
    assert_eq!(series.len(), 6);
    assert_eq!(series[1]["L"], "1 + q^1 + q^2");
    assert_eq!(series[5]["points"], 21);
}

#[test]
fn statistics_of_the_eight_label_tableau() {
    let v = json(&["stats", "--n", "8", "--k", "3", "--tableau", "[[[1,2,6],[5]],[],[[3,7],[4,8]]]"]);
    assert_eq!(v["stats"]["wcomaj"], 38);
    assert_eq!(v["stats"]["wdes"], 11);
}

#[test]
fn rsk_preserves_statistics() {
    let v = json(&["rsk", "--n", "3", "--k", "2", "--perm", "u1 1 u0 3 | u1 2"]);
    assert_eq!(v["preserved"], true);
}

#[test]
fn rule_file_matches_named_rule() {
    let path = std::env::temp_dir().join(format!("wreath-chars-rule-{}.json", std::process::id()));
    std::fs::write(&path, defining_rule(3, 2).to_json().to_string()).unwrap();
    let from_file = json(&["decompose", "--n", "3", "--k", "2", "--rule-file", path.to_str().unwrap()]);
    let named = json(&["decompose", "--n", "3", "--k", "2", "--rule", "defining"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(from_file["multiplicities"], named["multiplicities"]);
}

#[test]
fn involution_audit_passes() {
    let v = json(&["involution-verify", "--n", "3", "--k", "2", "--rule", "natural", "--d", "2"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 10);
}

#[test]
fn brute_force_cross_check() {
    let v = json(&["decompose", "--n", "3", "--k", "3", "--rule", "random", "--seed", "11", "--verify"]);
    assert_eq!(v["brute_force_agrees"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["decompose", "--n", "3", "--rule", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["chartable"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--n", "3", "--rule", "fxd", "--shape", "2,2"]).status.code(), Some(2));
    assert_eq!(run(&["chartable", "--n", "2", "--k", "13"]).status.code(), Some(3));
    assert_eq!(
        run(&["euler-mahonian", "--n", "2", "--tmax", "9", "--max-degree", "5"]).status.code(),
        Some(3)
    );
    let o = run(&["chartable", "--n", "2", "--k", "13", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exit_code"], 3);
}

#[test]
fn output_is_deterministic() {
    let args = ["frobenius", "--polytope", "cross:2", "--n", "2", "--k", "2", "--tmax", "2", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let mut threaded = Command::new(env!("CARGO_BIN_EXE_wreath-chars"));
    threaded.args(args).env("WREATH_CHARS_THREADS", "1");
    assert_eq!(threaded.output().unwrap().stdout, run(&args).stdout);
}

#[test]
fn selftest_single_criterion() {
    let o = run(&["selftest", "--criterion", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS criterion  2"));
    assert_eq!(run(&["selftest", "--criterion", "99"]).status.code(), Some(2));
}
