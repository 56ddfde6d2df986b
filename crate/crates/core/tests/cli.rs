mod common;

use common::*;
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run_bin(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}"));
    (code, v)
}

#[test]
fn enumerate_out_of_range_is_usage_error() {
    assert_eq!(run_bin(&["enumerate", "--genus", "3", "--max-punctures", "2"]).0, 2);
    assert_eq!(run_bin(&["enumerate"]).0, 2);
}

#[test]
fn enumerate_genus_two_matches_table() {
    let (code, v) = json(&["enumerate", "--genus", "2", "--max-punctures", "0", "--compare"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 12);
    assert_eq!(v["command"], "enumerate");
}

#[test]
fn enumerate_rejections_are_listed() {
    let (code, v) = json(&["enumerate", "--genus", "0", "--max-punctures", "3", "--rejections"]);
    assert_eq!(code, 0);
    assert!(!v["rejections"].as_array().unwrap().is_empty());
}

#[test]
fn bounds_text_summary() {
    let (code, out, _) = run_bin(&["bounds", &factor_path("three-theta.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("tunnel ≥ 1; ledger 3 ≤ 3 (tight)"), "{out}");
}

#[test]
fn bounds_semantic_errors_exit_three() {
    for f in ["hopf-in-s3.json", "lens-in-s3.json"] {
        let (code, _, err) = run_bin(&["bounds", &factor_path(f)]);
        assert_eq!(code, 3, "{f}");
        assert!(err.contains("invalid factorization"), "{err}");
    }
}

#[test]
fn bounds_parse_error_exits_two() {
    let dir = std::env::temp_dir().join(format!("netext-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"factors": [{"kind": "NoSuchKind"}]}"#).unwrap();
    assert_eq!(run_bin(&["bounds", bad.to_str().unwrap()]).0, 2);
    let wrong_schema = dir.join("schema.json");
    std::fs::write(&wrong_schema, r#"{"schema": 2, "factors": [{"kind": "Curve_1_1"}]}"#).unwrap();
    assert_eq!(run_bin(&["bounds", wrong_schema.to_str().unwrap()]).0, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn strict_ledger_exits_one_when_infeasible() {
    assert_eq!(run_bin(&["ledger", &factor_path("odd-theta-5.json")]).0, 0);
    assert_eq!(run_bin(&["ledger", "--strict", &factor_path("odd-theta-5.json")]).0, 1);
    assert_eq!(run_bin(&["bounds", "--strict", &factor_path("odd-theta-5.json")]).0, 1);
    assert_eq!(run_bin(&["ledger", "--strict", &factor_path("three-theta.json")]).0, 0);
}

#[test]
fn ledger_refuses_generic_factors() {
    assert_eq!(run_bin(&["ledger", &factor_path("brunnian-one.json")]).0, 3);
}

#[test]
fn check_propeller() {
    let (code, v) = json(&["check", &decomposition_path("propeller.json")]);
    assert_eq!(code, 0);
    let s = &v["summary"];
    assert_eq!(s["netext"], "1");
    assert_eq!(s["netchi"], 4);
    assert_eq!(s["capital_delta"], "2");
    assert_eq!(s["sum_delta"], "2");
}

#[test]
fn check_surgery_on_slinky() {
    let (code, v) = json(&["check", &decomposition_path("slinky-4.json"), "--surger", "F1"]);
    assert_eq!(code, 0);
    let r = &v["surgery"]["report"];
    assert_eq!(r["netext"], serde_json::json!(["1", "1", "1"]));
    assert_eq!(r["correction"], "1");
    assert_eq!(r["netext_identity"], true);
    assert_eq!(r["netchi_identity"], true);
}

#[test]
fn check_unknown_thin_surface() {
    assert_eq!(run_bin(&["check", &decomposition_path("slinky-4.json"), "--surger", "nope"]).0, 3);
}

#[test]
fn corrupted_orientation_reports_cycle() {
    let (code, out, _) = run_bin(&["check", &decomposition_path("corrupted-orientation.json")]);
    assert_eq!(code, 3);
    assert!(out.contains("digraph cycle"), "{out}");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "bounds", &factor_path("theta-and-knot.json")];
    let a = run_bin(&args);
    let b = run_bin(&args);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["schema"], 1);
}

#[test]
fn thread_variable_is_validated() {
    let run = |val: &str| {
        std::process::Command::new(env!("CARGO_BIN_EXE_netext"))
            .args(["enumerate", "--genus", "0", "--max-punctures", "2"])
            .env("NETEXT_THREADS", val)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("2"), Some(0));
    assert_eq!(run("zero"), Some(2));
    assert_eq!(run("0"), Some(2));
}

#[test]
fn verify_lemmas_quick() {
    let (code, v) = json(&["verify-lemmas", "--samples", "50", "--max-factors", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 10);
}
