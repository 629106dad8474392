//! Isomorph rejection: a normal form for tilings up to similarity.

use std::fmt;

use serde::Serialize;

use crate::geom::Symmetry;
use crate::lattice::{gcd, ITile};
use crate::scalar::ExactScalar;
use crate::tiling::{Tiling, TilingError};

/// Sorted `(b, a, down, size)` records of the tiles after moving the tiling
/// to the origin, dividing by the gcd of the sizes and minimising over the
/// twelve lattice symmetries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalKey(pub Vec<(i64, i64, bool, i64)>);

impl CanonicalKey {
    pub fn tiles(&self) -> Vec<ITile> {
        self.0.iter().map(|&(b, a, down, s)| ITile { up: !down, a, b, s }).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The normal form as a tiling of the convex hull of its tiles.
    pub fn to_tiling(&self) -> Tiling {
        integer_tiling(&self.tiles())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (b, a, down, s)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}{},{},{}", if *down { 'D' } else { 'U' }, a, b, s)?;
        }
        Ok(())
    }
}

/// Recovers the integer tile with the given vertex set.
pub fn itile_from_vertices(v: [(i64, i64); 3]) -> ITile {
    let min_b = v.iter().map(|p| p.1).min().unwrap();
    let max_b = v.iter().map(|p| p.1).max().unwrap();
    let s = max_b - min_b;
    let on_min = v.iter().filter(|p| p.1 == min_b).count();
    if on_min == 2 {
        let a = v.iter().filter(|p| p.1 == min_b).map(|p| p.0).min().unwrap();
        ITile::up(a, min_b, s)
    } else {
        let a = v.iter().filter(|p| p.1 == max_b).map(|p| p.0).min().unwrap();
        ITile::down(a, max_b, s)
    }
}

fn normalise(tiles: &[ITile]) -> Vec<(i64, i64, bool, i64)> {
    let g = tiles.iter().fold(0, |g, t| gcd(g, t.s)).max(1);
    let min_a = tiles.iter().flat_map(|t| t.vertices()).map(|p| p.0).min().unwrap_or(0);
    let min_b = tiles.iter().flat_map(|t| t.vertices()).map(|p| p.1).min().unwrap_or(0);
    let mut out: Vec<_> = tiles.iter().map(|t| ((t.b - min_b) / g, (t.a - min_a) / g, !t.up, t.s / g)).collect();
    out.sort();
    out
}

pub fn key_of_itiles(tiles: &[ITile]) -> CanonicalKey {
    let best = Symmetry::all()
        .map(|sym| {
            let moved: Vec<ITile> = tiles
                .iter()
                .map(|t| {
                    let v = t.vertices();
                    itile_from_vertices([sym.apply_int(v[0]), sym.apply_int(v[1]), sym.apply_int(v[2])])
                })
                .collect();
            normalise(&moved)
        })
        .min()
        .unwrap_or_default();
    CanonicalKey(best)
}

pub fn canonical_key(t: &Tiling) -> Result<CanonicalKey, TilingError> {
    let (_, _, tiles) = t.integer_form()?;
    Ok(key_of_itiles(&tiles))
}

/// Tiling of the hull of integer tiles.
pub fn integer_tiling(tiles: &[ITile]) -> Tiling {
    let one = ExactScalar::one();
    let tiles: Vec<_> = tiles.iter().map(|t| t.to_tile(&one)).collect();
    let region = crate::tiling::hull_polygon(tiles.iter().flat_map(|t| t.vertices())).expect("tiles have a hull");
    Tiling::new(region, tiles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{LatticePoint, Tile};

    fn quartered() -> Tiling {
        Tiling::from_tiles(vec![Tile::up(0, 0, 1), Tile::up(1, 0, 1), Tile::up(0, 1, 1), Tile::down(0, 1, 1)]).unwrap()
    }

    #[test]
    fn vertex_round_trip() {
        for t in [ITile::up(2, -1, 3), ITile::down(-4, 5, 2)] {
            assert_eq!(itile_from_vertices(t.vertices()), t);
        }
    }

    #[test]
    fn invariant_under_similarity() {
        let t = Tiling::from_tiles(vec![
            Tile::down(2, 1, 1),
            Tile::up(2, 1, 1),
            Tile::down(1, 2, 1),
            Tile::up(1, 0, 2),
        ])
        .unwrap();
        let k = canonical_key(&t).unwrap();
        for sym in Symmetry::all() {
            let moved = t.apply(sym).scale(&ExactScalar::from(7)).translate(&LatticePoint::new(3, -2));
            assert_eq!(canonical_key(&moved).unwrap(), k);
        }
        assert_ne!(canonical_key(&quartered()).unwrap(), k);
        assert!(k.to_tiling().verify().valid);
    }
}
