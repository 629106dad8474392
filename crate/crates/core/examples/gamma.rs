//! Builds the incidence graph of a few tilings and prints its census.
//!
//! `cargo run --example gamma`

use tritile::constructions::{q_pentagon, spiral_pentagon};
use tritile::gamma::{census, check_pair_bound};

fn main() {
    for (name, t) in [("P_8", spiral_pentagon(8).unwrap()), ("Q_14", q_pentagon(14).unwrap())] {
        let c = census(&t).unwrap();
        let l = check_pair_bound(&t).unwrap();
        println!("{name}: V={} E={} F={} v2={} v3={} v6={}", c.v, c.e, c.f, c.v2, c.v3, c.v6);
        println!("  faces {:?}, outer {}", c.f_2i, c.outer_len);
        println!("  pairs {} >= m + v_pi - 3 = {}", l.pairs, l.m + l.v_pi - 3);
    }
}
