//! Enumerates small tilings and prints a summary per shape and tile count.
//!
//! `cargo run --release --example enumerate -- <max-tiles> <scale> [--t-perfect]`

use std::time::Instant;

use tritile::search::{enumerate_tilings, SearchBudget};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let b: i64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(4);
    let tp = args.iter().any(|a| a == "--t-perfect");
    let start = Instant::now();
    let budget = SearchBudget::new(n, b).t_perfect(tp);
    match enumerate_tilings(None, &budget) {
        Ok(e) => {
            println!("{} regions, {} tilings, {} nodes", e.regions, e.tilings.len(), e.nodes);
            for row in e.summary() {
                println!("{:<13} n={:<2} s={:<2} t_perfect={:<5} count={}", row.shape.name(), row.n, row.s, row.t_perfect, row.count);
            }
        }
        Err(err) => println!("{err}"),
    }
    eprintln!("{:.2?}", start.elapsed());
}
