//! End-to-end tests of the `cybe` binary.

use std::process::{Command, Output};

fn cybe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cybe")).args(args).env_remove("CYBE_CATALOG").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn schouten_of_sl2_cases() {
    let o = cybe(&["schouten", "e1^em1", "e1^em1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "h1^e1^em1");
    let o = cybe(&["schouten", "h1^e1", "h1^e1"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn check_with_specialized_parameter() {
    let o = cybe(&["check", "r8_1", "--params", "a=0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("param a = 0"));
    assert!(text.contains("PASS cybe.r8_1.repair"));
    assert!(text.contains("PASS reality.r8_1.star3"));
}

#[test]
fn derive_reports_singular_and_regular_forms() {
    let o = cybe(&["derive", "g1a", "P1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cybe pass"));
    let o = cybe(&["derive", "e1* + e4* + e5*", "P2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("pfaffian 0"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["frobnicate"][..], &["verify", "--bogus"][..], &[][..]] {
        let o = cybe(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    }
}

#[test]
fn bad_input_is_rejected() {
    assert_eq!(cybe(&["check", "r99"]).status.code(), Some(2));
    assert_eq!(cybe(&["schouten", "e1", "e1^e2"]).status.code(), Some(2));
    assert_eq!(cybe(&["check", "r8_1", "--params", "zz=1"]).status.code(), Some(2));
}

#[test]
fn catalog_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.txt");
    std::fs::write(&path, "r = e1^\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_cybe"))
        .args(["check", "r8_1"])
        .env("CYBE_CATALOG", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn report_is_deterministic_and_consistent_with_exit_code() {
    let one = cybe(&["report", "--format", "json", "--jobs", "1"]);
    let two = cybe(&["report", "--format", "json", "--jobs", "2"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);

    let json: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    let checks = json["checks"].as_array().unwrap();
    let required_fail = checks.iter().any(|c| c["verdict"] == "fail" && c["required"] == true);
    let any_fail = checks.iter().any(|c| c["verdict"] == "fail");

    let verify = cybe(&["verify", "--format", "json", "--jobs", "2"]);
    assert_eq!(verify.stdout, one.stdout);
    assert_eq!(verify.status.code(), Some(i32::from(required_fail)));
    let strict = cybe(&["verify", "--strict", "--jobs", "2"]);
    assert_eq!(strict.status.code(), Some(i32::from(any_fail)));
}
