//! Regenerates the shipped data files by reconstruction.
//!
//! `cargo run --release --example generate_data -- <crate-dir>`

use std::fs;
use std::path::PathBuf;

use tritile::appendix::ROWS;
use tritile::format::serialize_with_comments;
use tritile::search::{reconstruct, tilings_in_region, ReconstructOptions, RegionSpec};
use tritile::ShapeClass;

fn csv(v: &[i64]) -> String {
    v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into())).join("data");
    fs::create_dir_all(dir.join("appendix")).unwrap();
    for row in ROWS {
        let opts = ReconstructOptions { t_perfect: row.t_perfect, ..Default::default() };
        let found = reconstruct(ShapeClass::Hexagon, row.sizes, &opts).expect("reconstruction");
        let line = format!("appendix tiling ({}): reconstructed from sizes {}", row.letter, csv(row.sizes));
        let cmd = format!("tritile reconstruct --shape hex --sizes {}{}", csv(row.sizes), if row.t_perfect { " --t-perfect" } else { "" });
        let text = serialize_with_comments(&found[0].tiling, &[&line, &cmd]);
        fs::write(dir.join("appendix").join(format!("{}.tritile", row.letter)), text).unwrap();
        println!("{} done", row.letter);
    }
    let sizes = [2, 2, 3, 5, 5, 7, 7, 8, 8, 9, 11, 12];
    let region = RegionSpec::from_sides([20, 0, 19, 9, 11, 8]).unwrap();
    let opts = ReconstructOptions { t_perfect: true, all: true, ..Default::default() };
    let all = tilings_in_region(region, &sizes, &opts).expect("q12");
    println!("{} t-perfect tilings of the base pentagon", all.len());
    let pick = all.iter().find(|r| tritile::constructions::q_base_audit(&r.tiling)).expect("an audited tiling");
    let line = format!("base pentagon: sides 20,19,9,11,8, reconstructed from sizes {}", csv(&sizes));
    let cmd = "tritile reconstruct --shape pent --sizes 2,2,3,5,5,7,7,8,8,9,11,12 --t-perfect --all (region 20,19,9,11,8)";
    fs::write(dir.join("q12.tritile"), serialize_with_comments(&pick.tiling, &[&line, cmd])).unwrap();
}
