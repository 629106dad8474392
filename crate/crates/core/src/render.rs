//! SVG output. The lattice point `(a, b)` is drawn at `x = a + b/2`,
//! `y = -b·√3/2`, so that up tiles point up on screen.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::geom::LatticePoint;
use crate::scalar::ExactScalar;
use crate::tiling::Tiling;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub px_per_unit: f64,
    pub stroke_width: f64,
    pub labels: bool,
    /// Fill colours, assigned to the distinct sizes in increasing order and
    /// reused cyclically.
    pub palette: Vec<String>,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            px_per_unit: 20.0,
            stroke_width: 1.0,
            labels: false,
            palette: ["#f4e3c1", "#c9e4de", "#c6def1", "#dbcdf0", "#f2c6de", "#f7d9c4", "#faedcb", "#d4e9c5"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }
}

fn xy(p: &LatticePoint, k: f64) -> (f64, f64) {
    let (x, y) = p.to_cartesian();
    // adding 0.0 turns -0.0 into 0.0
    (x * k + 0.0, -y * k + 0.0)
}

pub fn render_svg(t: &Tiling, style: &RenderStyle) -> String {
    let k = style.px_per_unit;
    let pts: Vec<(f64, f64)> = t.region().vertices().iter().map(|p| xy(p, k)).collect();
    let pad = 2.0 * style.stroke_width;
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - pad;
    let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + pad;
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - pad;
    let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + pad;
    let (w, h) = (max_x - min_x, max_y - min_y);
    let sizes: Vec<&ExactScalar> = {
        let mut v: Vec<&ExactScalar> = t.tiles().iter().map(|t| &t.size).collect();
        v.sort();
        v.dedup();
        v
    };
    let colour: BTreeMap<&ExactScalar, &str> = sizes
        .iter()
        .enumerate()
        .map(|(i, s)| (*s, style.palette.get(i % style.palette.len().max(1)).map_or("#ffffff", |c| c.as_str())))
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.6}" height="{h:.6}" viewBox="{min_x:.6} {min_y:.6} {w:.6} {h:.6}">"##
    );
    for tile in t.tiles() {
        let v: Vec<String> = tile.vertices().iter().map(|p| xy(p, k)).map(|(x, y)| format!("{x:.6},{y:.6}")).collect();
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="{}" stroke="#000000" stroke-width="{:.6}"/>"##,
            v.join(" "),
            colour[&tile.size],
            style.stroke_width
        );
    }
    if style.labels {
        for tile in t.tiles() {
            let (x, y) = xy(&tile.centroid(), k);
            let font = (tile.size.to_f64() * k / 3.0).clamp(4.0, 48.0);
            let _ = writeln!(
                out,
                r##"<text x="{x:.6}" y="{y:.6}" font-size="{font:.6}" text-anchor="middle" dominant-baseline="middle">{}</text>"##,
                tile.size
            );
        }
    }
    let mut d = String::new();
    for (i, (x, y)) in pts.iter().enumerate() {
        let _ = write!(d, "{}{x:.6},{y:.6} ", if i == 0 { "M" } else { "L" });
    }
    d.push('Z');
    let _ = writeln!(out, r##"<path d="{d}" fill="none" stroke="#000000" stroke-width="{:.6}"/>"##, 2.0 * style.stroke_width);
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Tile;

    #[test]
    fn unit_triangle() {
        let t = Tiling::from_tiles(vec![Tile::up(0, 0, 1)]).unwrap();
        let svg = render_svg(&t, &RenderStyle::default());
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains("0.000000,0.000000 20.000000,0.000000 10.000000,-17.320508"));
        assert_eq!(svg, render_svg(&t, &RenderStyle::default()));
    }
}
