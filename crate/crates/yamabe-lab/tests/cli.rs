//! End-to-end checks of the `yamabe-lab` binary: output formats, exit codes,
//! and the byte-determinism contract.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yamabe-lab"))
        .args(args)
        .env_remove("YAMABE_LAB_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn bounds_default_lists_catalog_as_json() {
    let output = run(&["bounds"]);
    assert!(output.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("valid json");
    let rows = rows.as_array().expect("array of rows");
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["manifold"], "S4");
    assert_eq!(rows[0]["exact"], true);
    assert_eq!(rows[0]["lower_symbolic"], "8*sqrt(6)*pi");
}

#[test]
fn bounds_k_m_flags() {
    let output = run(&["bounds", "--k", "1", "--m", "3"]);
    assert!(output.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(rows[0]["manifold"], "CP2 # 3(S1xS3)");
    assert_eq!(rows[0]["exact"], true);
    assert_eq!(rows[0]["lower"], rows[0]["upper"]);

    let output = run(&["bounds", "--k", "2", "--m", "0", "--format", "csv"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "manifold,lower,upper,exact,lower_symbolic,upper_symbolic,provenance"
    );
    let row = lines.next().unwrap();
    assert!(
        row.starts_with("2CP2,53.3145952579,56.1985178483,false"),
        "row: {row}"
    );
}

#[test]
fn bounds_named_pair_and_unknown_name() {
    let output = run(&["bounds", "--name", "hopf-blowup-pair"]);
    assert!(output.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let hopf = rows[0]["lower"].as_f64().unwrap();
    let blowup = rows[1]["lower"].as_f64().unwrap();
    assert!((hopf - 61.5623918478).abs() < 1e-9);
    assert!((blowup - 53.3145952579).abs() < 1e-9);

    let output = run(&["bounds", "--name", "k3"]);
    assert!(!output.status.success());
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("unknown manifold"), "stderr: {err}");
    assert!(err.contains("hopf-blowup-pair"), "stderr: {err}");
}

#[test]
fn bounds_rejects_out_of_range_k() {
    let output = run(&["bounds", "--k", "4", "--m", "0"]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("k must be 1, 2, or 3"), "stderr: {err}");
}

#[test]
fn bounds_output_is_byte_identical_across_runs() {
    let first = run(&["bounds", "--k", "3", "--m", "2"]);
    let second = run(&["bounds", "--k", "3", "--m", "2"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn spectrum_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spectrum.json");
    let mut file = std::fs::File::create(&path).unwrap();
    write!(
        file,
        r#"{{"n": 8, "u": "1", "f": "1", "solver": {{"tol": 1e-10}}}}"#
    )
    .unwrap();
    let path = path.to_str().unwrap();

    let output = run(&["spectrum", "--config", path]);
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["sign"], "-");
    assert_eq!(report["n"], 8);
    assert!((report["lambda"].as_f64().unwrap() + 1.0).abs() < 1e-9);
    assert!(report["residual"].as_f64().unwrap() < 1e-10);

    // Determinism includes the solver path.
    let again = run(&["spectrum", "--config", path]);
    assert_eq!(output.stdout, again.stdout);
}

#[test]
fn spectrum_identifies_scalar_flat_class() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("class.json");
    std::fs::write(&path, r#"{"n": 8, "u": "1 + 0.2*cos(2*pi*x1)", "f": "0"}"#).unwrap();
    let output = run(&["spectrum", "--config", path.to_str().unwrap()]);
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["sign"], "0");
    assert!(report["lambda"].as_f64().unwrap().abs() < 1e-10);
}

#[test]
fn spectrum_config_errors_are_diagnosed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"n": 8, "u": "1 + cos(2*pi*x9)"}"#).unwrap();
    let output = run(&["spectrum", "--config", path.to_str().unwrap()]);
    assert!(!output.status.success());
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("field `u`"), "stderr: {err}");
    assert!(err.contains("x9"), "stderr: {err}");
}

#[test]
fn verify_all_suites_pass() {
    for suite in [
        "algebra",
        "covariance",
        "trichotomy",
        "lattice",
        "constants",
    ] {
        let output = run(&["verify", suite]);
        assert!(
            output.status.success(),
            "suite {suite} failed: {}",
            stdout(&output)
        );
        let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
        assert_eq!(report["suite"], suite);
        assert_eq!(report["passed"], true);
        for case in report["cases"].as_array().unwrap() {
            assert_eq!(case["passed"], true, "case failed: {case}");
        }
    }
}

#[test]
fn verify_honors_jobs_and_env_threads() {
    let sequential = run(&["verify", "algebra"]);
    let parallel = run(&["verify", "algebra", "--jobs", "4"]);
    assert!(sequential.status.success());
    assert!(parallel.status.success());
    assert_eq!(sequential.stdout, parallel.stdout);

    let via_env = Command::new(env!("CARGO_BIN_EXE_yamabe-lab"))
        .args(["verify", "algebra"])
        .env("YAMABE_LAB_THREADS", "3")
        .output()
        .expect("binary runs");
    assert!(via_env.status.success());
    assert_eq!(sequential.stdout, via_env.stdout);
}

#[test]
fn verify_rejects_unknown_suite() {
    let output = run(&["verify", "everything"]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("unknown suite"), "stderr: {err}");
}
