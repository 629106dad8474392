//! Integer lattice helpers used by the verifier, the graph builder and the
//! search engine once coordinates have been scaled to integers.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::geom::{ConvexLatticePolygon, LatticePoint, Orientation, Tile};
use crate::scalar::ExactScalar;

pub const INF: i64 = i64::MAX / 4;

/// An integer tile: orientation, anchor and size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ITile {
    pub up: bool,
    pub a: i64,
    pub b: i64,
    pub s: i64,
}

impl ITile {
    pub fn up(a: i64, b: i64, s: i64) -> Self {
        ITile { up: true, a, b, s }
    }

    pub fn down(a: i64, b: i64, s: i64) -> Self {
        ITile { up: false, a, b, s }
    }

    pub fn vertices(&self) -> [(i64, i64); 3] {
        let (a, b, s) = (self.a, self.b, self.s);
        if self.up {
            [(a, b), (a + s, b), (a, b + s)]
        } else {
            [(a, b), (a + s, b - s), (a + s, b)]
        }
    }

    pub fn tri_box(&self) -> TriBox {
        let (a, b, s) = (self.a, self.b, self.s);
        if self.up {
            TriBox { a0: a, a1: a + s, b0: b, b1: b + s, c0: a + b, c1: a + b + s }
        } else {
            TriBox { a0: a, a1: a + s, b0: b - s, b1: b, c0: a + b, c1: a + b + s }
        }
    }

    pub fn contains_point(&self, (a, b): (i64, i64)) -> bool {
        if self.up {
            a >= self.a && b >= self.b && a + b <= self.a + self.b + self.s
        } else {
            b <= self.b && a + b >= self.a + self.b && a <= self.a + self.s
        }
    }

    pub fn to_tile(&self, scale: &ExactScalar) -> Tile {
        let orient = if self.up { Orientation::Up } else { Orientation::Down };
        Tile::new(
            orient,
            LatticePoint::new(ExactScalar::from(self.a) / scale, ExactScalar::from(self.b) / scale),
            ExactScalar::from(self.s) / scale,
        )
    }

    /// Integer image of an exact tile under multiplication by `scale`.
    pub fn from_tile(t: &Tile, scale: &BigInt) -> Option<ITile> {
        Some(ITile {
            up: t.orient == Orientation::Up,
            a: scaled_i64(&t.anchor.a, scale)?,
            b: scaled_i64(&t.anchor.b, scale)?,
            s: scaled_i64(&t.size, scale)?,
        })
    }

    pub fn area(&self) -> i64 {
        self.s * self.s
    }
}

pub fn scaled_i64(v: &ExactScalar, scale: &BigInt) -> Option<i64> {
    let r = v.scaled_integer(scale)?.to_i64()?;
    (r.abs() < INF / 8).then_some(r)
}

/// The set `{a0 ≤ a ≤ a1, b0 ≤ b ≤ b1, c0 ≤ a + b ≤ c1}`. Every tile and every
/// convex lattice polygon with lattice edges has this form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriBox {
    pub a0: i64,
    pub a1: i64,
    pub b0: i64,
    pub b1: i64,
    pub c0: i64,
    pub c1: i64,
}

impl TriBox {
    pub fn from_polygon(p: &ConvexLatticePolygon, scale: &BigInt) -> Option<TriBox> {
        let pts: Option<Vec<(i64, i64)>> = p
            .vertices()
            .iter()
            .map(|v| Some((scaled_i64(&v.a, scale)?, scaled_i64(&v.b, scale)?)))
            .collect();
        Some(TriBox::hull_of_points(&pts?))
    }

    pub fn hull_of_points(pts: &[(i64, i64)]) -> TriBox {
        let mut r = TriBox::empty();
        for &(a, b) in pts {
            r.a0 = r.a0.min(a);
            r.a1 = r.a1.max(a);
            r.b0 = r.b0.min(b);
            r.b1 = r.b1.max(b);
            r.c0 = r.c0.min(a + b);
            r.c1 = r.c1.max(a + b);
        }
        r
    }

    pub fn empty() -> TriBox {
        TriBox { a0: INF, a1: -INF, b0: INF, b1: -INF, c0: INF, c1: -INF }
    }

    pub fn hull(&self, o: &TriBox) -> TriBox {
        TriBox {
            a0: self.a0.min(o.a0),
            a1: self.a1.max(o.a1),
            b0: self.b0.min(o.b0),
            b1: self.b1.max(o.b1),
            c0: self.c0.min(o.c0),
            c1: self.c1.max(o.c1),
        }
    }

    pub fn intersect(&self, o: &TriBox) -> TriBox {
        TriBox {
            a0: self.a0.max(o.a0),
            a1: self.a1.min(o.a1),
            b0: self.b0.max(o.b0),
            b1: self.b1.min(o.b1),
            c0: self.c0.max(o.c0),
            c1: self.c1.min(o.c1),
        }
    }

    /// Shrinks each bound to the extent of the actual set.
    pub fn tighten(&self) -> TriBox {
        let mut t = *self;
        for _ in 0..3 {
            t.a0 = t.a0.max(t.c0 - t.b1);
            t.a1 = t.a1.min(t.c1 - t.b0);
            t.b0 = t.b0.max(t.c0 - t.a1);
            t.b1 = t.b1.min(t.c1 - t.a0);
            t.c0 = t.c0.max(t.a0 + t.b0);
            t.c1 = t.c1.min(t.a1 + t.b1);
        }
        t
    }

    pub fn has_interior(&self) -> bool {
        self.a0 < self.a1
            && self.b0 < self.b1
            && self.c0 < self.c1
            && self.c0.max(self.a0 + self.b0) < self.c1.min(self.a1 + self.b1)
    }

    pub fn interiors_meet(&self, o: &TriBox) -> bool {
        self.intersect(o).has_interior()
    }

    pub fn contains_point(&self, (a, b): (i64, i64)) -> bool {
        (self.a0..=self.a1).contains(&a) && (self.b0..=self.b1).contains(&b) && (self.c0..=self.c1).contains(&(a + b))
    }

    pub fn contains_box(&self, o: &TriBox) -> bool {
        self.a0 <= o.a0 && o.a1 <= self.a1 && self.b0 <= o.b0 && o.b1 <= self.b1 && self.c0 <= o.c0 && o.c1 <= self.c1
    }

    /// Area in unit cells of a tight box: an up triangle of side `l` with
    /// three corners cut off.
    pub fn area(&self) -> i64 {
        let t = self.tighten();
        if !t.has_interior() {
            return 0;
        }
        let l = t.c1 - t.a0 - t.b0;
        let x = t.c0 - t.a0 - t.b0;
        let y = t.c1 - t.b0 - t.a1;
        let z = t.c1 - t.a0 - t.b1;
        l * l - x * x - y * y - z * z
    }

    /// Unit cells of row `j` (between `b = j` and `b = j + 1`) inside the box,
    /// as an inclusive range of cell indices `k`. Up cell `i` has `k = 2i`,
    /// down cell `i` (vertices `(i, j+1)`, `(i+1, j+1)`, `(i+1, j)`) has `k = 2i + 1`.
    pub fn row_cells(&self, j: i64) -> Option<(i64, i64)> {
        if j < self.b0 || j + 1 > self.b1 {
            return None;
        }
        let up_lo = self.a0.max(self.c0 - j);
        let up_hi = (self.a1 - 1).min(self.c1 - j - 1);
        let dn_lo = self.a0.max(self.c0 - j - 1);
        let dn_hi = (self.a1 - 1).min(self.c1 - j - 2);
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        if up_lo <= up_hi {
            lo = lo.min(2 * up_lo);
            hi = hi.max(2 * up_hi);
        }
        if dn_lo <= dn_hi {
            lo = lo.min(2 * dn_lo + 1);
            hi = hi.max(2 * dn_hi + 1);
        }
        (lo <= hi).then_some((lo, hi))
    }
}

/// A unit cell in integer coordinates: row `j` and index `k` as in
/// [`TriBox::row_cells`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Cell {
    pub row: i64,
    pub k: i64,
}

impl Cell {
    pub fn as_itile(&self) -> ITile {
        let i = self.k.div_euclid(2);
        if self.k.rem_euclid(2) == 0 {
            ITile::up(i, self.row, 1)
        } else {
            ITile::down(i, self.row + 1, 1)
        }
    }

    pub fn vertices(&self) -> [(i64, i64); 3] {
        self.as_itile().vertices()
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tile_rows_match_vertices() {
        // every cell reported in a row lies inside the tile
        for t in [ITile::up(2, -1, 3), ITile::down(-1, 4, 3)] {
            let bx = t.tri_box();
            let mut count = 0;
            for j in bx.b0..bx.b1 {
                let (lo, hi) = bx.row_cells(j).unwrap();
                for k in lo..=hi {
                    let c = Cell { row: j, k };
                    assert!(c.vertices().iter().all(|&p| t.contains_point(p)), "{t:?} {c:?}");
                    count += 1;
                }
            }
            assert_eq!(count, t.area());
        }
    }

    #[test]
    fn box_area() {
        let hex = TriBox::hull_of_points(&[(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]);
        assert_eq!(hex.area(), 6);
        assert_eq!(ITile::down(0, 3, 3).tri_box().area(), 9);
    }

    #[test]
    fn interior_overlap() {
        let u = ITile::up(0, 0, 1).tri_box();
        let d = ITile::down(0, 1, 1).tri_box();
        assert!(!u.interiors_meet(&d));
        assert!(u.interiors_meet(&ITile::up(0, 0, 2).tri_box()));
        assert!(!u.interiors_meet(&ITile::up(1, 0, 1).tri_box()));
    }
}
