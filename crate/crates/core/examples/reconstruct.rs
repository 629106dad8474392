//! Finds a hexagon tiling with a given size multiset.
//!
//! `cargo run --release --example reconstruct -- 1,3,3,3,4,4,5,5,6`

use std::time::Instant;

use tritile::search::{reconstruct, ReconstructOptions};
use tritile::ShapeClass;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,3,3,3,4,4,5,5,6".into());
    let t_perfect = std::env::args().any(|a| a == "--t-perfect");
    let sizes: Vec<i64> = arg.split(',').map(|s| s.trim().parse().expect("integer size")).collect();
    let opts = ReconstructOptions { t_perfect, ..Default::default() };
    let start = Instant::now();
    match reconstruct(ShapeClass::Hexagon, &sizes, &opts) {
        Ok(found) => {
            let r = &found[0];
            let st = r.tiling.stats();
            println!("region {:?}: n={} s={} t_perfect={}", r.region.sides(), st.n, st.s, st.t_perfect);
            print!("{}", tritile::format::serialize(&r.tiling));
        }
        Err(e) => println!("{e}"),
    }
    eprintln!("{:.2?}", start.elapsed());
}
