//! Acceptance suite: one test per headline criterion, each printing a
//! pass/fail line with the measured quantity (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! Thresholds are pinned here and in `yamabe_lab::cli::verify`; the CLI
//! `verify` subcommand runs the same case functions, so the command-line
//! suites and this gate cannot drift apart.

use std::time::{Duration, Instant};

use yamabe_lab::cli::verify::{self, CaseResult};

fn check(criterion: &str, limit: Duration, cases: &[fn() -> CaseResult]) {
    let start = Instant::now();
    let results: Vec<CaseResult> = cases.iter().map(|case| case()).collect();
    let elapsed = start.elapsed();
    let passed = results.iter().all(|r| r.passed);
    let status = if passed { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {status} ({elapsed:.2?})");
    for r in &results {
        println!(
            "    [{}] {}: measured {:.3e} vs threshold {:.3e} — {}",
            if r.passed { "ok" } else { "FAIL" },
            r.name,
            r.measured,
            r.threshold,
            r.detail
        );
    }
    assert!(passed, "criterion {criterion} failed: {results:?}");
    assert!(
        elapsed <= limit,
        "criterion {criterion} exceeded its time budget: {elapsed:.2?} > {limit:.2?}"
    );
}

#[test]
fn criterion_01_anchor_constants() {
    check(
        "1 (Y(CP2) = 12*sqrt(2)*pi, Y(S4) = 8*sqrt(6)*pi to 1e-12)",
        Duration::from_secs(1),
        &[verify::case_anchor_constants],
    );
}

#[test]
fn criterion_02_bound_table() {
    check(
        "2 (bound table [12*sqrt(2)*pi, 4*pi*sqrt(2k+16)], m-independent, below Y(S4))",
        Duration::from_secs(1),
        &[verify::case_connected_sum_table],
    );
}

#[test]
fn criterion_03_lattice_oracle() {
    check(
        "3 (min characteristic squares 9, 10, 11; square ≡ signature mod 8)",
        Duration::from_secs(30),
        &[
            verify::case_min_characteristic_squares,
            verify::case_characteristic_square_mod8,
        ],
    );
}

#[test]
fn criterion_04_covariance_second_order() {
    check(
        "4 (conformal covariance residual decreases at second order, N = 8 -> 16 -> 32)",
        Duration::from_secs(60),
        &[verify::case_covariance_residual_second_order],
    );
}

#[test]
fn criterion_05_spectral_exactness() {
    check(
        "5 (lambda(6*laplacian - c) = -c to 1e-10, constant positive eigenfunction)",
        Duration::from_secs(10),
        &[verify::case_spectral_shift_exactness],
    );
}

#[test]
fn criterion_06_ground_state_identification() {
    check(
        "6 (eigenfunction converges to 1/u under the O(h^2) envelope, lambda in zero band)",
        Duration::from_secs(60),
        &[verify::case_ground_state_identification],
    );
}

#[test]
fn criterion_07_trichotomy_invariance() {
    check(
        "7 (sign constant per perturbation over 10 random conformal factors)",
        Duration::from_secs(120),
        &[verify::case_sign_invariance_under_rescaling],
    );
}

#[test]
fn criterion_08_clifford_suite() {
    check(
        "8 (eigenvalues ±i*sqrt(2)|omega| and anticommutator identity to 1e-12)",
        Duration::from_secs(5),
        &[
            verify::case_clifford_eigenvalues,
            verify::case_clifford_anticommutator,
        ],
    );
}

#[test]
fn criterion_09_norm_conformal_invariance() {
    check(
        "9 (L2 norm of a self-dual form invariant to 1e-12 over 10 conformal factors)",
        Duration::from_secs(5),
        &[verify::case_l2_norm_conformal_invariance],
    );
}

#[test]
fn criterion_10_yamabe_descent() {
    check(
        "10 (flat-class Yamabe estimate reaches 0 within 1e-3 at N = 16, monotone trace)",
        Duration::from_secs(120),
        &[verify::case_flat_class_descent],
    );
}
