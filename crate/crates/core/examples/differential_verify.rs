//! Runs the differential suites against the brute-force evaluator.
//!
//! `cargo run --release --example differential_verify -- [seed] [instances]`

use qcsp::verify::{run_suite, Suite};

pub fn run_with(seed: u64, instances: usize) {
    let reports = run_suite(Suite::All, seed, instances);
    for r in &reports {
        println!("{r}");
    }
    assert!(reports.iter().all(|r| r.passed()));
}

pub fn run() {
    run_with(0, 20);
}

#[allow(dead_code)]
fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(0, |s| s.parse().expect("seed"));
    let instances = args.next().map_or(100, |s| s.parse().expect("instances"));
    run_with(seed, instances);
}
