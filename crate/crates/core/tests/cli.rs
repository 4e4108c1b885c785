//! Exit codes and output of the installed binary.

use std::process::{Command, Output};

fn run(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_motzkin-minors"));
    cmd.args(args).env_remove("MF_THREADS");
    if let Some(t) = threads {
        cmd.env("MF_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn triangle_rows_at_point() {
    let o = run(&["triangle", "--rows", "3", "--at", "2,2"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(3), Some("3: 14 | 14 | 6 | 1"));
}

#[test]
fn triangle_json_has_schema_version() {
    let o = run(&["triangle", "--rows", "2", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn verify_passes_with_zero() {
    let o = run(&["verify", "--id", "odd-catalan-squares", "--max", "6"], Some("2"));
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS odd-catalan-squares"));
}

#[test]
fn mismatched_certificate_exits_one() {
    let o = run(&["telescope", "--cert", "catalan-gap", "--summand", "catalan-adjacent", "--max-m", "4"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL wz"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--id", "no-such-identity"], None).status.code(), Some(2));
    assert_eq!(run(&["triangle", "--rows", "x"], None).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(run(&["verify", "--all"], Some("zero")).status.code(), Some(2));
}
