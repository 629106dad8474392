//! Grows t-perfect triangles, trapezoids and parallelograms from the shipped
//! hexagons by adding tiles over matching sides.
//!
//! `cargo run --release --example table2`

use tritile::constructions::{table2_build, RECIPES};

fn main() {
    for r in RECIPES.iter() {
        match table2_build(r.shape, r.n) {
            Ok(t) => println!(
                "{:<13} n={:<3} from ({}) s={:<3} t_perfect={}",
                r.shape.name(),
                t.len(),
                r.base,
                t.distinct_sizes(),
                t.is_t_perfect()
            ),
            Err(e) => println!("{:<13} n={:<3} {e}", r.shape.name(), r.n),
        }
    }
}
