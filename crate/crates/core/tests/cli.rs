use std::process::{Command, Output};

use serde_json::Value;

fn octoverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octoverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["--suite", "bogus"][..],
        &["--trials", "0"],
        &["--format", "xml"],
        &["--seed", "-1"],
        &["--no-such-flag"],
    ] {
        assert_eq!(octoverify(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn passing_suite_exits_zero_and_is_deterministic() {
    let args = [
        "--suite",
        "identities",
        "--seed",
        "11",
        "--trials",
        "16",
        "--format",
        "json",
    ];
    let a = octoverify(&args);
    let b = octoverify(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn findings_do_not_change_the_exit_code() {
    let out = octoverify(&["--suite", "representations", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["summary"]["finding"].as_u64().unwrap() >= 1);
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn json_report_schema() {
    let out = octoverify(&["--suite", "table", "--trials", "8", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["version", "suite", "seed", "checks", "summary"]);
    assert_eq!(v["suite"], "table");
    assert_eq!(v["seed"], 0);
    let checks = v["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for c in checks {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["name", "paper_ref", "status", "witness"]);
        assert!(["pass", "fail", "finding"].contains(&c["status"].as_str().unwrap()));
    }
    let total: u64 = ["pass", "fail", "finding"]
        .iter()
        .map(|k| v["summary"][k].as_u64().unwrap())
        .sum();
    assert_eq!(total as usize, checks.len());
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("octoverify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let out = octoverify(&["--suite", "clifford", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("octoverify "));
    assert!(text.trim_end().ends_with("fail=0 finding=0"));
    std::fs::remove_dir_all(&dir).unwrap();
}
