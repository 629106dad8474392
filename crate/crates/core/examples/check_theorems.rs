//! Runs the conformance suite and prints one line per check.
//!
//! `cargo run --release --example check_theorems -- 6 8`

use tritile::conformance::{run, ConformanceOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let scale = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let max_tiles = args.next().and_then(|s| s.parse().ok()).unwrap_or(8);
    let report = run(&ConformanceOptions { scale, max_tiles, ..ConformanceOptions::default() });
    for c in &report.checks {
        println!("{:<16} {:?} {:.2}s {}", c.name, c.status, c.seconds, c.detail);
    }
    println!("passed: {}", report.passed);
}
