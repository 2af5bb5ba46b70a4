//! Black-box tests of the command-line interface: exit codes, the output
//! contract of the verification commands, and byte-stable artifacts.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn wavetor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wavetor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn exact_verification_succeeds_and_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = wavetor(&["verify-bf", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("ALL GROUPS ZERO"), "stdout: {}", stdout(&out));
    assert!(dir.path().join("manifest.json").exists());
    assert!(dir.path().join("bf_certificate.json").exists());
}

#[test]
fn negative_control_exits_nonzero_by_design() {
    let dir = tempfile::tempdir().unwrap();
    let out = wavetor(&[
        "verify-bf",
        "--negative-control",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("exiting nonzero by design"));
    assert!(stdout(&out).contains("-448"));
}

#[test]
fn numeric_sweep_passes_quickly_at_small_size() {
    let dir = tempfile::tempdir().unwrap();
    let out = wavetor(&[
        "verify-bf",
        "--numeric",
        "--points",
        "5",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stdout: {}", stdout(&out));
    assert!(dir.path().join("bf_numeric.json").exists());
}

#[test]
fn unknown_config_keys_are_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.conf");
    fs::write(&cfg, "points = 5\nno_such_option = 1\n").unwrap();
    let out = wavetor(&[
        "verify-bf",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no_such_option"));
}

#[test]
fn unknown_flags_are_a_usage_error() {
    let out = wavetor(&["verify-bf", "--no-such-flag"]);
    assert_eq!(exit_code(&out), 2);
}

fn run_small_simulation(dir: &Path, plots: bool) -> Output {
    let mut args = vec![
        "simulate",
        "--modes",
        "32",
        "--dt",
        "0.01",
        "--t-final",
        "0.2",
        "--diag-every",
        "10",
        "--band",
        "1,2",
        "--out",
    ];
    let out_str = dir.to_str().unwrap();
    args.push(out_str);
    if plots {
        args.push("--plots");
    }
    wavetor(&args)
}

#[test]
fn simulation_output_is_byte_stable() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let out_a = run_small_simulation(a.path(), false);
    let out_b = run_small_simulation(b.path(), true);
    assert_eq!(exit_code(&out_a), 0, "stderr: {}", String::from_utf8_lossy(&out_a.stderr));
    assert_eq!(exit_code(&out_b), 0);
    let csv_a = fs::read(a.path().join("energies.csv")).unwrap();
    let csv_b = fs::read(b.path().join("energies.csv")).unwrap();
    assert_eq!(csv_a, csv_b, "identical configurations must write identical CSV");
    assert!(!a.path().join("energies.svg").exists());
    assert!(b.path().join("energies.svg").exists());
}

#[test]
fn dn_check_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = wavetor(&["dn-check", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "stdout: {}", stdout(&out));
    let csv = fs::read_to_string(dir.path().join("dn.csv")).unwrap();
    assert!(csv.starts_with("identity,points,max_rel_err,tol,status"));
    assert!(csv.lines().count() > 1);
}
