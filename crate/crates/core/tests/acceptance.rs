//! Acceptance suite: one test per verification criterion, each printing a
//! single pass/fail line. Run with `cargo test --test acceptance`
//! (`-- --nocapture` to see the lines for passing checks too).

use lielat::verify;

fn run(check: fn() -> verify::CheckResult) {
    let result = check();
    println!("{}", result.line());
    assert!(result.passed, "{}", result.line());
}

#[test]
fn criterion_01_distributivity_theorem() {
    run(verify::check_distributivity_theorem);
}

#[test]
fn criterion_02_oracle_equivalence() {
    run(verify::check_oracle_equivalence);
}

#[test]
fn criterion_03_count_formulas() {
    run(verify::check_count_formulas);
}

#[test]
fn criterion_04_boolean_characterization() {
    run(verify::check_boolean_characterization);
}

#[test]
fn criterion_05_negative_realizability() {
    run(verify::check_negative_realizability);
}

#[test]
fn criterion_06_infinite_detection() {
    run(verify::check_infinite_detection);
}

#[test]
fn criterion_07_radical_chain() {
    run(verify::check_radical_chain);
}

#[test]
fn criterion_08_classification_round_trip() {
    run(verify::check_classification_round_trip);
}

#[test]
fn criterion_09_distributive_enumeration() {
    run(verify::check_distributive_enumeration);
}

#[test]
fn criterion_10_lattice_law_cross_check() {
    run(verify::check_lattice_law_cross_check);
}
