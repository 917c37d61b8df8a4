use serde_json::Value;
use std::process::{Command, Output};

fn bqkz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bqkz")).args(args).env("BQKZ_THREADS", "1").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = bqkz(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn ybe_suite_passes_for_rank_three() {
    let out = bqkz(&["verify", "ybe", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS") && l.contains("Yang-Baxter")), "{text}");
}

#[test]
fn macdonald_suite_reports_every_check() {
    let v = json(&["verify", "macdonald", "--n", "2", "--maxdeg", "3", "--json"]);
    assert_eq!(v["schema"], "bqkz/1");
    let checks = v["result"]["checks"].as_array().expect("check list");
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert!(checks.iter().all(|c| !c["identity"].as_str().unwrap_or("").is_empty()));
}

#[test]
fn rank_one_is_a_usage_error() {
    assert_eq!(bqkz(&["verify", "hecke", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn numeric_mode_rejects_q_on_the_unit_circle() {
    let out = bqkz(&["eval", "--mode", "numeric", "--q", "1.0", "--t", "1.5,0.4", "--gamma", "2,0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn poincare_polynomial_of_s3() {
    let out = bqkz(&["compute", "poincare", "--n", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    // Σ_w k^{2ℓ(w)} = 1 + 2k² + 2k⁴ + k⁶
    assert!(text.contains("k^6 + 2*k^4 + 2*k^2 + 1"), "{text}");
}

#[test]
fn symmetric_polynomial_of_degree_one() {
    let v = json(&["compute", "macdonald", "--n", "2", "--lambda", "1,0", "--json"]);
    let terms = v["result"]["e"]["terms"].as_array().unwrap();
    let mut exps: Vec<Vec<i64>> = terms
        .iter()
        .map(|t| t["exponents"].as_array().unwrap().iter().map(|e| e.as_i64().unwrap()).collect())
        .collect();
    exps.sort();
    assert_eq!(exps, vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(terms[0]["coeff"], terms[1]["coeff"]);
}

#[test]
fn series_starts_at_longest_element() {
    let v = json(&["compute", "series", "--n", "2", "--degree", "2", "--json"]);
    let first = &v["result"][0];
    assert_eq!(first["alpha"], serde_json::json!([0]));
    assert_eq!(first["beta"], serde_json::json!([0]));
    let entries = first["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["perm"], serde_json::json!([2, 1]));
    assert_eq!(entries[0]["coeff"], "(1)/(1)");
}

#[test]
fn output_is_deterministic() {
    let args = ["polred", "--mode", "numeric", "--lambda", "1,0", "--count", "3", "--json"];
    assert_eq!(bqkz(&args).stdout, bqkz(&args).stdout);
    let args = ["verify", "cocycle", "--n", "2", "--samples", "10", "--seed", "3", "--json"];
    assert_eq!(bqkz(&args).stdout, bqkz(&args).stdout);
}

#[test]
fn points_file_needs_the_schema_tag() {
    let dir = std::env::temp_dir().join(format!("bqkz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"schema": "other/2", "points": []}"#).unwrap();
    let out = bqkz(&["polred", "--mode", "numeric", "--lambda", "1,0", "--points", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let good = dir.join("good.json");
    std::fs::write(&good, r#"{"schema": "bqkz/1", "points": [[[0.2, 0.1], [1.7, -0.4]]]}"#).unwrap();
    let v = json(&["polred", "--mode", "numeric", "--lambda", "1,0", "--points", good.to_str().unwrap(), "--json"]);
    assert_eq!(v["result"].as_array().unwrap().len(), 1);
    std::fs::remove_dir_all(&dir).ok();
}
