//! Renders a shipped hexagon tiling to SVG with size labels.
//!
//! `cargo run --example render -- c out.svg`

use tritile::appendix;
use tritile::render::{render_svg, RenderStyle};

fn main() {
    let mut args = std::env::args().skip(1);
    let letter = args.next().and_then(|s| s.chars().next()).unwrap_or('c');
    let out = args.next().unwrap_or_else(|| format!("{letter}.svg"));
    let t = appendix::tiling(letter).expect("known row").expect("shipped data parses");
    let style = RenderStyle { labels: true, px_per_unit: 12.0, ..RenderStyle::default() };
    std::fs::write(&out, render_svg(&t, &style)).expect("writable output");
    println!("wrote {out}");
}
