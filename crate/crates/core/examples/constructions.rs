//! Builds the spiral pentagons and the polygons derived from them.
//!
//! `cargo run --example constructions -- 14`

use tritile::constructions::{derived_polygon, q_pentagon, spiral_pentagon, t_derived};
use tritile::Tiling;

fn show(name: &str, t: &Tiling) {
    println!("{name:<10} {:<13} n={:<3} s={:<3} t_perfect={}", t.shape().name(), t.len(), t.distinct_sizes(), t.is_t_perfect());
}

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(14);
    show(&format!("P_{n}"), &spiral_pentagon(n).unwrap());
    for v in ['a', 'b', 'c', 'e'] {
        show(&format!("P_{n}({v})"), &derived_polygon(n, v).unwrap());
    }
    show(&format!("Q_{n}"), &q_pentagon(n).unwrap());
    for v in ['a', 'b', 'c', 'e'] {
        match t_derived(n, v) {
            Ok(t) => show(&format!("Q_{n}({v})"), &t),
            Err(e) => println!("Q_{n}({v})    {e}"),
        }
    }
}
