use std::process::{Command, Output};

use serde_json::Value;

fn scan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbilic-scan"))
        .arg("analyze")
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn round_sphere_is_totally_umbilical_everywhere() {
    let out = scan(&[
        "--spacetime",
        "minkowski",
        "--surface",
        "sphere:r=2",
        "--grid",
        "16x32",
        "--mode",
        "full",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    let s = &report["summary"];
    assert_eq!(s["points"], 512);
    assert_eq!(s["counts"]["totally_umbilical"], 512);
    assert_eq!(s["pass"], true);
}

#[test]
fn noncommuting_graph_classifies() {
    let out = scan(&["--surface", "graph-noncommuting", "--mode", "classify", "--grid", "8x8"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["summary"]["counts"]["umbilical_status:None"], 64);
}

#[test]
fn inside_horizon_is_a_domain_error() {
    let out = scan(&[
        "--spacetime",
        "schwarzschild:M=1",
        "--surface",
        "rsphere:r=1.5",
        "--grid",
        "8x8",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(scan(&["--grid", "3"]).status.code(), Some(2));
    assert_eq!(scan(&["--spacetime", "kerr"]).status.code(), Some(2));
    assert_eq!(scan(&["--mode", "verify", "--grid", "1x4"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["--surface", "torus", "--grid", "6x6", "--mode", "full", "--seed", "7"];
    let a = scan(&args);
    let b = scan(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let csv = ["--surface", "torus", "--grid", "6x6", "--format", "csv"];
    assert_eq!(scan(&csv).stdout, scan(&csv).stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("umbilic-scan-{}.csv", std::process::id()));
    let out = scan(&["--grid", "4x4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text.lines().count(), 17);
    assert!(text.starts_with("i,j,u,v"));
}

#[test]
fn list_catalog_names_fixtures() {
    let out = scan(&["--list-catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("schwarzschild-ef:M"));
    assert!(text.contains("--surface rsphere:r=2"));
}
