//! Acceptance battery: one test per criterion, each printing a PASS/FAIL line.

use compat_tilings::acceptance::{run_one, Criterion};

const SEED: u64 = 0;

fn check(id: &str) -> Criterion {
    let c = run_one(id, SEED).unwrap_or_else(|e| panic!("{id} could not run: {e}"));
    println!("{}", c.line());
    c
}

fn assert_criterion(id: &str) {
    let c = check(id);
    assert!(c.ok(), "{}", c.line());
}

#[test]
fn a01_chi_star_battery() {
    assert_criterion("A1");
}

#[test]
fn a02_kuhn_osthus_base() {
    assert_criterion("A2");
}

#[test]
fn a03_extremal_instance() {
    assert_criterion("A3");
}

#[test]
fn a04_index_vector_claim() {
    assert_criterion("A4");
}

#[test]
fn a05_counting_robustness() {
    assert_criterion("A5");
}

#[test]
fn a06_lattice_oracle() {
    assert_criterion("A6");
}

#[test]
fn a07_almost_cover() {
    assert_criterion("A7");
}

#[test]
fn a08_assembly_round_trips() {
    assert_criterion("A8");
}

#[test]
fn a09_solver_oracle() {
    assert_criterion("A9");
}

#[test]
fn a10_determinism() {
    assert_criterion("A10");
}
