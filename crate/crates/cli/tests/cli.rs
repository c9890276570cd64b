//! End-to-end tests of the `perfcode` binary: construction round trips,
//! invariant reports, verification suites, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_perfcode"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn write_fano(dir: &Path) -> PathBuf {
    let p = dir.join("fano.sts");
    std::fs::write(
        &p,
        "n=7\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n",
    )
    .unwrap();
    p
}

#[test]
fn construct_hamming_and_report_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h7.code");
    let status = run(&["construct", "hamming", "--m", "3", "-o", &path_str(&out)]);
    assert!(status.status.success(), "{status:?}");

    let report = run(&["invariants", &path_str(&out), "--format", "json"]);
    assert!(report.status.success());
    let json: serde_json::Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(json["n"], 7);
    assert_eq!(json["size"], 16);
    assert_eq!(json["rank"], 4);
    assert_eq!(json["kernel_dim"], 4);
    assert_eq!(json["perfect"], true);
}

#[test]
fn construct_vasilev_nonlinear() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("h7.code");
    let out = dir.path().join("v15.code");
    assert!(run(&["construct", "hamming", "--m", "3", "-o", &path_str(&base)])
        .status
        .success());
    let status = run(&[
        "construct",
        "vasilev",
        "--base",
        &path_str(&base),
        "--lambda",
        "nonlinear:seed=1",
        "-o",
        &path_str(&out),
    ]);
    assert!(status.status.success(), "{status:?}");

    let report = run(&["invariants", &path_str(&out), "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(json["n"], 15);
    assert_eq!(json["size"], 2048);
    assert_eq!(json["rank"], 12);
    assert_eq!(json["kernel_dim"], 7);
    assert_eq!(json["lin_mu"], serde_json::json!([15]));
}

#[test]
fn construct_mollard_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep3.code");
    let out = dir.path().join("m15.code");
    assert!(run(&["construct", "hamming", "--m", "2", "-o", &path_str(&rep)])
        .status
        .success());
    let status = run(&[
        "construct",
        "mollard",
        "--c",
        &path_str(&rep),
        "--d",
        &path_str(&rep),
        "-o",
        &path_str(&out),
    ]);
    assert!(status.status.success(), "{status:?}");

    let report = run(&["invariants", &path_str(&out), "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(json["n"], 15);
    assert_eq!(json["size"], 2048);
    assert_eq!(json["rank"], 11);
    assert_eq!(json["perfect"], true);
}

#[test]
fn sts_invariants_of_the_fano_plane() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write_fano(dir.path());
    let report = run(&["invariants", &path_str(&fano), "--format", "json"]);
    assert!(report.status.success());
    let json: serde_json::Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(json["n"], 7);
    assert_eq!(json["triples"], 7);
    assert_eq!(json["pasch_total"], 7);
    assert_eq!(json["projective"], true);
}

#[test]
fn mollard_sts_of_two_fano_planes() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write_fano(dir.path());
    let out = dir.path().join("m63.sts");
    let status = run(&[
        "construct",
        "mollard-sts",
        "--s1",
        &path_str(&fano),
        "--s2",
        &path_str(&fano),
        "-o",
        &path_str(&out),
    ]);
    assert!(status.status.success(), "{status:?}");
    let report = run(&["invariants", &path_str(&out), "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(json["n"], 63);
    assert_eq!(json["triples"], 651);
}

#[test]
fn verify_theorem2_on_the_default_grid_exits_zero() {
    let out = run(&["verify", "theorem2", "--t", "3", "--m", "3"]);
    assert!(out.status.success(), "{out:?}");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS group-equality"), "{text}");
    assert!(text.contains("|G| = 576"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn verify_lemmas_json_output() {
    let out = run(&[
        "verify", "lemmas", "--t", "3", "--m", "3", "--format", "json",
    ]);
    assert!(out.status.success(), "{out:?}");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let claims = json["claims"].as_array().unwrap();
    assert!(!claims.is_empty());
    assert!(claims.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn usage_errors_exit_with_code_two() {
    // unknown subcommand (clap reports 2 itself)
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // missing instance arguments
    let out = run(&["verify", "lemmas"]);
    assert_eq!(out.status.code(), Some(2));
    // unreadable input file
    let out = run(&["invariants", "/nonexistent/input.code"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_limit_exits_with_code_three() {
    let out = run(&["verify", "lemmas", "--t", "3", "--m", "3", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn theorem2_over_budget_skips_instead_of_failing() {
    let out = run(&["verify", "theorem2", "--t", "3", "--m", "3", "--budget", "1"]);
    assert!(out.status.success(), "{out:?}");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("SKIP"), "{text}");
}
