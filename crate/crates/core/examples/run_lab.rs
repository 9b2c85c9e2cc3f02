//! Run every verification suite and print the summary tables.
//!
//! `cargo run --release --example run_lab -- [max_size]` lowers every
//! algebra size bound to `max_size` for a quicker, weaker run.

use chilogic::lab::{run_all, LabConfig, Status};

fn main() {
    let mut config = LabConfig::default();
    if let Some(n) = std::env::args().nth(1).and_then(|a| a.parse().ok()) {
        config = config.with_max_size(n);
    }
    let reports = run_all(&config);
    let mut failed = 0;
    let mut flagged = 0;
    for report in &reports {
        println!("{}", report.summary_table());
        failed += report.count(Status::Fail);
        flagged += report.count(Status::Flagged);
    }
    println!("{failed} failed, {flagged} flagged");
}
