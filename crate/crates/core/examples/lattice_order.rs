//! Order the canonical logics by comparing cores on every algebra of size
//! at most ten, and print the covering pairs found by the prover.

use chilogic::lab::suite_order;

fn main() {
    let report = suite_order(10);
    for check in &report.checks {
        println!("{:<28} {:<8} {}", check.id, check.status.label(), check.detail);
    }
}
