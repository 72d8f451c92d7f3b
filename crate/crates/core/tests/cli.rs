use std::process::{Command, Output};

use serde_json::Value;

fn finring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finring")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = finring(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (v, out.status.code().unwrap())
}

#[test]
fn classify_reports_flags_and_both_readings() {
    let (v, code) = json(&["classify", "Z6"]);
    assert_eq!(code, 0);
    assert_eq!(v["profile"]["flags"]["uwnc"], true);
    assert_eq!(v["profile"]["flags"]["unc"], false);
    assert_eq!(v["uniquely_weakly_nil_clean"].as_array().unwrap().len(), 2);
}

#[test]
fn decompose_lists_witnesses() {
    let (v, code) = json(&["decompose", "Z3", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["weakly_nil_clean"], true);
    assert_eq!(v["nil_clean"], false);
}

#[test]
fn bad_spec_exits_with_usage_code() {
    let out = finring(&["classify", "T2(Z4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column"));
    let out = finring(&["hunt", "--target", "CONJ-7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let (v, code) = json(&["verify", "--check", "CHK-LOCAL"]);
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["fail"], 0);
    let out = finring(&["verify", "--check", "CHK-NOPE"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reads_a_catalog_file() {
    let dir = std::env::temp_dir().join(format!("finring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cat.txt");
    std::fs::write(&path, "budget = 64\nZ3\nZ4\n").unwrap();
    let (v, code) = json(&["verify", "--catalog", path.to_str().unwrap(), "--check", "CHK-P0.2.6"]);
    assert_eq!(code, 1);
    assert_eq!(v["budget"], 64);
    assert!(v["counts"]["fail"].as_u64().unwrap() >= 1);
    std::fs::write(&path, "Z3\nnot a ring\n").unwrap();
    let out = finring(&["verify", "--catalog", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn hunt_exit_code_reflects_counterexamples() {
    let (v, code) = json(&["hunt", "--target", "CONJ-2", "--max-zn", "12", "--no-families"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "no-counterexample-found");
    let (v, code) = json(&["hunt", "--target", "CONJ-1", "--max-zn", "4", "--no-families"]);
    assert_eq!(code, 1);
    assert!(!v["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn catalog_list_and_tables() {
    let (v, code) = json(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 31);
    assert!(v["entries"].as_array().unwrap().iter().any(|e| e["gated"] == true));

    let out = finring(&["dump-tables", "Z3", "--op", "add"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() >= 3);
}

#[test]
fn text_format_is_the_default() {
    let out = finring(&["classify", "Z4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("uwnc: true"), "{text}");
}
