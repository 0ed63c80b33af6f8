//! End-to-end tests of the command-line binary: output bytes, determinism
//! and the exit-status contract (0 success, 1 runtime, 2 usage).

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtsallis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("qtsallis-cli-{}-{name}", std::process::id()));
    path
}

#[test]
fn sweep_emits_the_documented_csv() {
    let out = run(&["sweep", "--p", "0.5", "--gamma", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "q,p,gamma,S_qA,S_qB,S_qAB,I_q,I_q_prime");
    assert_eq!(lines.len(), 202, "header plus 201 records");
    assert!(!text.contains('\r'));
    assert!(text.ends_with('\n'));

    let first: Vec<f64> = lines[1].split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert_eq!(first[6], 2.0, "support-count value at q = 0");

    // every row carries the crossed-term identity
    for line in &lines[1..] {
        let f: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        let residual = (f[7] - (f[6] + (1.0 - f[0]) * f[3] * f[4])).abs();
        assert!(residual <= 1e-12, "row identity residual {residual:.3e}");
    }
}

#[test]
fn sweep_output_is_byte_deterministic() {
    let args = ["sweep", "--p", "0.3", "--gamma", "0.7", "--steps", "101"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn sweep_to_file_matches_stdout() {
    let path = temp_path("sweep.csv");
    let to_stdout = run(&["sweep", "--p", "0.4", "--gamma", "0.9", "--steps", "11"]);
    let to_file = run(&[
        "sweep",
        "--p",
        "0.4",
        "--gamma",
        "0.9",
        "--steps",
        "11",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, to_stdout.stdout);
}

#[test]
fn sweep_usage_errors_exit_two() {
    // parameter outside the unit interval
    let out = run(&["sweep", "--p", "1.5", "--gamma", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    // degenerate q interval
    let out = run(&["sweep", "--p", "0.5", "--gamma", "1", "--q-min", "2", "--q-max", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // too few steps
    let out = run(&["sweep", "--p", "0.5", "--gamma", "1", "--steps", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // missing required flag and unknown flag are clap usage errors
    let out = run(&["sweep", "--p", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["sweep", "--p", "0.5", "--gamma", "1", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    // bad measure token
    let out = run(&["sweep", "--p", "0.5", "--gamma", "1", "--measure", "entropy"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_io_failures_exit_one() {
    let out = run(&[
        "sweep",
        "--p",
        "0.5",
        "--gamma",
        "1",
        "--out",
        "/nonexistent-dir/sweep.csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn figure_emits_the_right_series() {
    let out = run(&["figure", "--id", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "q,iq_g1,iq_g0.999,iq_g0,ref_2ln2");
    assert_eq!(lines.len(), 402, "header plus 401 samples");
    let reference = format!("{:.16e}", 2.0 * 2.0f64.ln());
    for line in &lines[1..] {
        assert!(line.ends_with(&reference), "constant reference column");
    }

    let out = run(&["figure", "--id", "4"]);
    assert_eq!(stdout_of(&out).lines().next().unwrap(), "q,iqp_p0.5,iqp_p0.999");
}

#[test]
fn figure_rejects_unknown_ids() {
    assert_eq!(run(&["figure", "--id", "0"]).status.code(), Some(2));
    assert_eq!(run(&["figure", "--id", "5"]).status.code(), Some(2));
}

#[test]
fn peak_prints_six_significant_digits() {
    let out = run(&["peak", "--p", "0.5", "--gamma", "0.999"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let fields: Vec<&str> = text.trim().split(' ').collect();
    assert_eq!(fields.len(), 2);
    let q_star: f64 = fields[0].strip_prefix("q_star=").unwrap().parse().unwrap();
    let value: f64 = fields[1].strip_prefix("value=").unwrap().parse().unwrap();
    assert!((0.25..=0.40).contains(&q_star), "q_star = {q_star}");
    assert!((value - 1.667852).abs() < 1e-3);
    // mantissa with 5 decimals = 6 significant digits
    assert!(fields[0].contains('.') && fields[0].contains('e'));
    let mantissa = fields[0]
        .strip_prefix("q_star=")
        .unwrap()
        .split('e')
        .next()
        .unwrap();
    assert_eq!(mantissa.split('.').nth(1).unwrap().len(), 5);
}

#[test]
fn peak_of_a_monotone_series_is_the_left_endpoint() {
    let out = run(&["peak", "--p", "0.5", "--gamma", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).starts_with("q_star=1.00000e-2 "));
}

#[test]
fn peak_usage_errors_exit_two() {
    let out = run(&["peak", "--p", "0.5", "--gamma", "1", "--q-lo", "2", "--q-hi", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["peak", "--p", "-0.5", "--gamma", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["peak", "--p", "0.5", "--gamma", "1", "--measure", "both"]);
    assert_eq!(out.status.code(), Some(2), "peak has no 'both' measure");
}

#[test]
fn verify_reports_every_check_and_passes() {
    let out = run(&["verify", "--seed", "42", "--trials", "60"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let pass_lines = text.lines().filter(|l| l.starts_with("PASS ")).count();
    assert_eq!(pass_lines, 7, "one line per check:\n{text}");
    assert!(text.lines().last().unwrap().starts_with("verify: all 7 checks"));
}

#[test]
fn verify_is_deterministic_for_a_fixed_seed() {
    let a = run(&["verify", "--seed", "7", "--trials", "40"]);
    let b = run(&["verify", "--seed", "7", "--trials", "40"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify", "--seed", "8", "--trials", "40"]);
    assert_ne!(a.stdout, c.stdout, "different seed, different sampled details");
}

#[test]
fn verify_rejects_zero_trials() {
    let out = run(&["verify", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("trials"));
}

#[test]
fn top_level_usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}
