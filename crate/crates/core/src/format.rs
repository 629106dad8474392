//! The `.tritile` text format.
//!
//! ```text
//! tritile 1
//! # comment
//! P <a> <b>                 region vertex, counterclockwise
//! T <U|D> <a> <b> <size>    tile
//! ```
//!
//! Rationals are written `p` or `p/q`. Canonical output lists the region
//! from its `(b, a)`-least vertex and the tiles sorted by `(b, a, orient, size)`.

use std::fmt::Write as _;

use crate::geom::{ConvexLatticePolygon, LatticePoint, Orientation, Tile};
use crate::scalar::ExactScalar;
use crate::tiling::Tiling;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

pub fn serialize(t: &Tiling) -> String {
    serialize_with_comments(t, &[])
}

/// Canonical text with `# ` comment lines after the header.
pub fn serialize_with_comments(t: &Tiling, comments: &[&str]) -> String {
    let mut out = String::from("tritile 1\n");
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for p in t.region().vertices() {
        let _ = writeln!(out, "P {} {}", p.a, p.b);
    }
    for tile in t.tiles() {
        let _ = writeln!(out, "T {} {} {} {}", tile.orient.letter(), tile.anchor.a, tile.anchor.b, tile.size);
    }
    out
}

pub fn parse(text: &str) -> Result<Tiling, ParseError> {
    let mut header = false;
    let mut region = Vec::new();
    let mut tiles = Vec::new();
    let mut region_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| ParseError { line, message };
        let fields: Vec<&str> = content.split_whitespace().collect();
        if !header {
            if fields != ["tritile", "1"] {
                return Err(err("expected header `tritile 1`".into()));
            }
            header = true;
            continue;
        }
        let num = |s: &str| s.parse::<ExactScalar>().map_err(|e| err(e.to_string()));
        match fields[0] {
            "P" => {
                if fields.len() != 3 {
                    return Err(err("expected `P <a> <b>`".into()));
                }
                region.push(LatticePoint { a: num(fields[1])?, b: num(fields[2])? });
                region_line = line;
            }
            "T" => {
                if fields.len() != 5 {
                    return Err(err("expected `T <U|D> <a> <b> <size>`".into()));
                }
                let orient = match fields[1] {
                    "U" => Orientation::Up,
                    "D" => Orientation::Down,
                    o => return Err(err(format!("unknown orientation `{o}`"))),
                };
                let anchor = LatticePoint { a: num(fields[2])?, b: num(fields[3])? };
                let size = num(fields[4])?;
                if !size.is_positive() {
                    return Err(err("tile size must be positive".into()));
                }
                tiles.push(Tile { orient, anchor, size });
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    if !header {
        return Err(ParseError { line: 1, message: "missing header".into() });
    }
    let region = ConvexLatticePolygon::new(region)
        .map_err(|e| ParseError { line: region_line.max(1), message: format!("region: {e}") })?;
    Ok(Tiling::new(region, tiles))
}
