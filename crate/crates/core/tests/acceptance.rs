//! Acceptance criteria. Each test prints one PASS/FAIL line and asserts it.

use lwc::verify;

fn criterion(number: usize) {
    let outcome = verify::run(number);
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn c01_counting_identity() {
    criterion(1);
}

#[test]
fn c02_mixture_identity() {
    criterion(2);
}

#[test]
fn c03_sampler_uniformity() {
    criterion(3);
}

#[test]
fn c04_lp_oracle_equivalence() {
    criterion(4);
}

#[test]
fn c05_unimodularity() {
    criterion(5);
}

#[test]
fn c06_reconstruction() {
    criterion(6);
}

#[test]
fn c07_transport_postconditions() {
    criterion(7);
}

#[test]
fn c08_surgery_pipeline() {
    criterion(8);
}

#[test]
fn c09_alpha_h_positivity() {
    criterion(9);
}

#[test]
fn c10_rate_function_algebra() {
    criterion(10);
}
