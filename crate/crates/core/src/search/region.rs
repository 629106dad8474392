//! Equiangular regions described as an up triangle of side `l` with corner
//! cuts `x` (bottom left), `y` (bottom right) and `z` (apex).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::geom::{ConvexLatticePolygon, LatticePoint, ShapeClass};
use crate::lattice::TriBox;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RegionSpec {
    pub l: i64,
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl RegionSpec {
    pub fn new(l: i64, x: i64, y: i64, z: i64) -> Option<RegionSpec> {
        let r = RegionSpec { l, x, y, z };
        let sides = r.sides();
        let ok = x >= 0 && y >= 0 && z >= 0 && sides.iter().all(|s| *s >= 0) && sides.iter().filter(|s| **s > 0).count() >= 3;
        ok.then_some(r)
    }

    /// Builds the region from a closed side vector (zeros allowed).
    pub fn from_sides(s: [i64; 6]) -> Option<RegionSpec> {
        if s[0] + s[1] != s[3] + s[4] || s[1] + s[2] != s[4] + s[5] {
            return None;
        }
        RegionSpec::new(s[0] + s[1] + s[5], s[5], s[1], s[3])
    }

    /// Side lengths counterclockwise from the bottom side; cut sides are at
    /// odd positions and may be zero.
    pub fn sides(&self) -> [i64; 6] {
        let RegionSpec { l, x, y, z } = *self;
        [l - x - y, y, l - y - z, z, l - z - x, x]
    }

    pub fn area(&self) -> i64 {
        self.l * self.l - self.x * self.x - self.y * self.y - self.z * self.z
    }

    pub fn tri_box(&self) -> TriBox {
        TriBox { a0: 0, a1: self.l - self.y, b0: 0, b1: self.l - self.z, c0: self.x, c1: self.l }
    }

    pub fn shape(&self) -> ShapeClass {
        let s = self.sides();
        match s.iter().filter(|v| **v > 0).count() {
            3 => ShapeClass::Triangle,
            4 => {
                // two zero sides two apart give a parallelogram
                let zeros: Vec<usize> = (0..6).filter(|&i| s[i] == 0).collect();
                if (zeros[1] - zeros[0]) % 6 == 3 {
                    ShapeClass::Parallelogram
                } else {
                    ShapeClass::Trapezoid
                }
            }
            5 => ShapeClass::Pentagon,
            _ => ShapeClass::Hexagon,
        }
    }

    /// Side vector normalised over rotations and reflections.
    pub fn canonical_sides(&self) -> [i64; 6] {
        canonical_side_vector(self.sides())
    }

    pub fn canonical(&self) -> RegionSpec {
        RegionSpec::from_sides(self.canonical_sides()).expect("canonical sides close")
    }

    pub fn polygon(&self) -> ConvexLatticePolygon {
        let RegionSpec { l, x, y, z } = *self;
        let pts = [(x, 0), (l - y, 0), (l - y, y), (z, l - z), (0, l - z), (0, x)];
        ConvexLatticePolygon::from_loop(pts.iter().map(|&(a, b)| LatticePoint::new(a, b)).collect())
            .expect("valid region")
    }
}

pub fn canonical_side_vector(s: [i64; 6]) -> [i64; 6] {
    let mut best = s;
    for rev in [false, true] {
        let mut v = s;
        if rev {
            v.reverse();
        }
        for r in 0..6 {
            let mut w = v;
            w.rotate_left(r);
            // keep cut sides at odd positions so the spec stays an up triangle with cuts
            if RegionSpec::from_sides(w).is_some() && w < best {
                best = w;
            }
        }
    }
    best
}

/// Every region with all sides at most `max_side`, one per similarity class
/// of side vectors up to rotation and reflection.
pub fn regions_up_to(max_side: i64) -> Vec<RegionSpec> {
    let mut seen = BTreeSet::new();
    for x in 0..=max_side {
        for y in 0..=max_side {
            for z in 0..=max_side {
                let lo = (x + y).max(y + z).max(z + x);
                for l in lo..=lo + max_side {
                    let Some(r) = RegionSpec::new(l, x, y, z) else { continue };
                    if r.sides().iter().any(|s| *s > max_side) {
                        continue;
                    }
                    seen.insert(r.canonical_sides());
                }
            }
        }
    }
    seen.into_iter().map(|s| RegionSpec::from_sides(s).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_areas() {
        assert_eq!(RegionSpec::new(2, 0, 0, 0).unwrap().shape(), ShapeClass::Triangle);
        assert_eq!(RegionSpec::new(2, 1, 1, 1).unwrap().shape(), ShapeClass::Triangle);
        assert_eq!(RegionSpec::new(3, 1, 0, 0).unwrap().shape(), ShapeClass::Trapezoid);
        assert_eq!(RegionSpec::new(2, 1, 1, 0).unwrap().shape(), ShapeClass::Parallelogram);
        assert_eq!(RegionSpec::new(3, 1, 1, 1).unwrap().shape(), ShapeClass::Hexagon);
        assert_eq!(RegionSpec::new(3, 1, 1, 1).unwrap().area(), 6);
        let r = RegionSpec::new(5, 1, 2, 0).unwrap();
        assert_eq!(r.polygon().area_cells(), r.area());
        assert_eq!(r.tri_box().area(), r.area());
    }

    #[test]
    fn canonical_is_symmetry_invariant() {
        let r = RegionSpec::new(7, 1, 2, 3).unwrap();
        let mut s = r.sides();
        s.rotate_left(2);
        s.reverse();
        assert_eq!(canonical_side_vector(s), r.canonical_sides());
    }

    #[test]
    fn small_region_counts() {
        let rs = regions_up_to(1);
        // unit triangle, rhombus, unit hexagon
        assert_eq!(rs.len(), 3);
    }
}
