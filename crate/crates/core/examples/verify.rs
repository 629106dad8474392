//! Parses a `.tritile` file, verifies it and prints its statistics.
//!
//! `cargo run --example verify -- data/appendix/c.tritile`

use tritile::format;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "data/appendix/c.tritile".into());
    let text = std::fs::read_to_string(&path).expect("readable file");
    let t = format::parse(&text).expect("well-formed tiling");
    let report = t.verify();
    if !report.valid {
        println!("invalid: {:?}", report.violation);
        return;
    }
    let s = t.stats();
    println!("{} with {} tiles, {} sizes, t-perfect {}, {} boundary vertices", s.shape, s.n, s.s, s.t_perfect, s.v_pi);
    println!("sizes {:?}", s.size_multiset.iter().map(|x| x.to_string()).collect::<Vec<_>>());
}
