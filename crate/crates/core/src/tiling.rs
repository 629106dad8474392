//! Tilings of convex lattice polygons: verification, statistics, vertex
//! classes and the attach/cut editing operations.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::geom::{ConvexLatticePolygon, Corner, LatticePoint, PolygonError, ShapeClass, Tile, TriBounds};
use crate::lattice::{Cell, ITile, TriBox};
use crate::scalar::{common_denominator, ExactScalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    TileOutsideRegion { tile: usize },
    Overlap { cell: Cell, tiles: (usize, usize) },
    Gap { cell: Cell },
    CoordinateOverflow,
}

/// Outcome of [`Tiling::verify`]. Cells are given in the integer frame
/// obtained by multiplying every coordinate by `scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub violation: Option<Violation>,
    pub scale: BigInt,
}

impl VerificationReport {
    /// The offending unit cell mapped back to the original coordinates.
    pub fn violation_cell(&self) -> Option<Tile> {
        let cell = match self.violation.as_ref()? {
            Violation::Overlap { cell, .. } | Violation::Gap { cell } => cell,
            Violation::TileOutsideRegion { .. } | Violation::CoordinateOverflow => return None,
        };
        Some(cell.as_itile().to_tile(&ExactScalar::from(self.scale.clone())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TilingError {
    #[error("tiling is not a partition of its region: {0:?}")]
    Invalid(Violation),
    #[error("coordinates too large for the integer engine")]
    Overflow,
    #[error("tile {0} is not exposed")]
    NotExposed(usize),
    #[error("no side of length {0}")]
    NoMatchingSide(ExactScalar),
    #[error("several sides of length {length}: {sides:?}")]
    AmbiguousSide { length: ExactScalar, sides: Vec<usize> },
    #[error("side {0} does not exist or has the wrong length")]
    BadSide(usize),
    #[error("result is not a convex lattice polygon")]
    NonConvexResult,
    #[error("added tiles do not form a strip over the side(s)")]
    StripMismatch,
    #[error("operation needs at least {0} tiles")]
    TooFewTiles(usize),
    #[error("lemma violated: {0}")]
    LemmaViolation(String),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexClass {
    ThirdPi,
    TwoThirdsPi,
    Pi,
    TwoPi,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TilingStats {
    pub n: usize,
    pub s: usize,
    pub v_pi: usize,
    pub shape: ShapeClass,
    pub t_perfect: bool,
    #[serde(serialize_with = "ser_scalars")]
    pub size_multiset: Vec<ExactScalar>,
}

pub(crate) fn ser_scalars<S: serde::Serializer>(v: &[ExactScalar], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Placement of one tile in [`Tiling::attach_split_side`]: the tile sits on
/// the line through side `side`, at `offset` from the side's start vertex.
/// A normal tile has an edge `[offset, offset + size]` on that line; a flipped
/// tile touches the line only at the point `offset` and points towards it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSpec {
    pub side: usize,
    pub offset: ExactScalar,
    pub size: ExactScalar,
    pub flipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    region: ConvexLatticePolygon,
    tiles: Vec<Tile>,
}

impl Tiling {
    /// Stores the tiles in canonical order. No validity check is made; call
    /// [`Tiling::verify`].
    pub fn new(region: ConvexLatticePolygon, mut tiles: Vec<Tile>) -> Tiling {
        tiles.sort();
        Tiling { region, tiles }
    }

    /// Tiling whose region is the convex hull of the tiles. Fails unless the
    /// tiles exactly partition a convex lattice polygon.
    pub fn from_tiles(tiles: Vec<Tile>) -> Result<Tiling, TilingError> {
        if tiles.is_empty() {
            return Err(TilingError::TooFewTiles(1));
        }
        let region = hull_polygon(tiles.iter().flat_map(|t| t.vertices()))?;
        let t = Tiling::new(region, tiles);
        t.verify_ok()?;
        Ok(t)
    }

    pub fn region(&self) -> &ConvexLatticePolygon {
        &self.region
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn shape(&self) -> ShapeClass {
        self.region.classify()
    }

    pub fn scale(&self, k: &ExactScalar) -> Tiling {
        Tiling::new(self.region.scale(k), self.tiles.iter().map(|t| t.scale(k)).collect())
    }

    pub fn apply(&self, sym: crate::geom::Symmetry) -> Tiling {
        Tiling::new(self.region.apply(sym), self.tiles.iter().map(|t| t.apply(sym)).collect())
    }

    pub fn translate(&self, by: &LatticePoint) -> Tiling {
        Tiling::new(self.region.translate(by), self.tiles.iter().map(|t| t.translate(by)).collect())
    }

    /// Common denominator of every coordinate and size.
    pub fn denominator(&self) -> BigInt {
        let mut vals: Vec<&ExactScalar> = Vec::new();
        for p in self.region.vertices() {
            vals.push(&p.a);
            vals.push(&p.b);
        }
        for t in &self.tiles {
            vals.push(&t.anchor.a);
            vals.push(&t.anchor.b);
            vals.push(&t.size);
        }
        common_denominator(vals)
    }

    /// Region and tiles scaled to integers by `denominator()`.
    pub fn integer_form(&self) -> Result<(BigInt, TriBox, Vec<ITile>), TilingError> {
        let scale = self.denominator();
        let region = TriBox::from_polygon(&self.region, &scale).ok_or(TilingError::Overflow)?;
        let tiles = self
            .tiles
            .iter()
            .map(|t| ITile::from_tile(t, &scale))
            .collect::<Option<Vec<_>>>()
            .ok_or(TilingError::Overflow)?;
        Ok((scale, region, tiles))
    }

    /// Exact partition check. After scaling to integers the tiles and the
    /// region are unions of unit cells; the tiles partition the region iff
    /// each lies inside it, no two share a cell, and the cell counts agree.
    /// A violation reports the first offending cell in (row, index) order.
    pub fn verify(&self) -> VerificationReport {
        let (scale, region, tiles) = match self.integer_form() {
            Ok(v) => v,
            Err(_) => {
                return VerificationReport {
                    valid: false,
                    violation: Some(Violation::CoordinateOverflow),
                    scale: self.denominator(),
                }
            }
        };
        let violation = find_violation(&region, &tiles);
        VerificationReport { valid: violation.is_none(), violation, scale }
    }

    pub fn verify_ok(&self) -> Result<(), TilingError> {
        match self.verify().violation {
            None => Ok(()),
            Some(v) => Err(TilingError::Invalid(v)),
        }
    }

    pub fn sizes(&self) -> Vec<ExactScalar> {
        let mut v: Vec<ExactScalar> = self.tiles.iter().map(|t| t.size.clone()).collect();
        v.sort();
        v
    }

    pub fn distinct_sizes(&self) -> usize {
        self.tiles.iter().map(|t| &t.size).collect::<BTreeSet<_>>().len()
    }

    /// Two equilateral lattice triangles are translates of each other exactly
    /// when they have the same size and orientation, so t-perfectness is a
    /// collision test on `(size, orientation)`.
    pub fn is_t_perfect(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.tiles.iter().all(|t| seen.insert((&t.size, t.orient)))
    }

    pub fn stats(&self) -> TilingStats {
        TilingStats {
            n: self.len(),
            s: self.distinct_sizes(),
            v_pi: self.v_pi(),
            shape: self.shape(),
            t_perfect: self.is_t_perfect(),
            size_multiset: self.sizes(),
        }
    }

    pub fn classify_vertices(&self) -> BTreeMap<LatticePoint, VertexClass> {
        let corners: BTreeMap<&LatticePoint, Corner> =
            self.region.vertices().iter().zip(self.region.corners()).collect();
        let mut out = BTreeMap::new();
        for t in &self.tiles {
            for v in t.vertices() {
                if out.contains_key(&v) {
                    continue;
                }
                let class = match corners.get(&v) {
                    Some(Corner::Sharp) => VertexClass::ThirdPi,
                    Some(Corner::Obtuse) => VertexClass::TwoThirdsPi,
                    None if self.region.on_boundary(&v) => VertexClass::Pi,
                    None => VertexClass::TwoPi,
                };
                out.insert(v, class);
            }
        }
        out
    }

    pub fn v_pi(&self) -> usize {
        self.classify_vertices().values().filter(|c| **c == VertexClass::Pi).count()
    }

    /// Indices of tiles containing a π/3 corner of the region.
    pub fn exposed_tiles(&self) -> Vec<usize> {
        let sharp: Vec<&LatticePoint> = self
            .region
            .vertices()
            .iter()
            .zip(self.region.corners())
            .filter(|(_, c)| *c == Corner::Sharp)
            .map(|(v, _)| v)
            .collect();
        (0..self.tiles.len())
            .filter(|&i| self.tiles[i].vertices().iter().any(|v| sharp.contains(&v)))
            .collect()
    }

    pub fn cut_exposed(&self, k: usize) -> Result<Tiling, TilingError> {
        if !self.exposed_tiles().contains(&k) {
            return Err(TilingError::NotExposed(k));
        }
        if self.tiles.len() < 2 {
            return Err(TilingError::TooFewTiles(2));
        }
        let mut tiles = self.tiles.clone();
        tiles.remove(k);
        Tiling::from_tiles(tiles)
    }

    /// Sides with the given length, as indices into `region().side_lengths()`.
    pub fn sides_of_length(&self, len: &ExactScalar) -> Vec<usize> {
        self.region
            .side_lengths()
            .iter()
            .enumerate()
            .filter(|(_, l)| *l == len)
            .map(|(i, _)| i)
            .collect()
    }

    /// Attaches a tile of size `side_length` externally over a full side of
    /// that length. `which` picks the side index when several match.
    pub fn attach_triangle(&self, side_length: &ExactScalar, which: Option<usize>) -> Result<Tiling, TilingError> {
        let cands = self.sides_of_length(side_length);
        let side = match (which, cands.len()) {
            (_, 0) => return Err(TilingError::NoMatchingSide(side_length.clone())),
            (Some(i), _) if cands.contains(&i) => i,
            (Some(i), _) => return Err(TilingError::BadSide(i)),
            (None, 1) => cands[0],
            (None, _) => return Err(TilingError::AmbiguousSide { length: side_length.clone(), sides: cands }),
        };
        self.attach_split_side(&[SplitSpec {
            side,
            offset: ExactScalar::zero(),
            size: side_length.clone(),
            flipped: false,
        }])
    }

    /// Attaches tiles along the lines of one or more sides of the region.
    pub fn attach_split_side(&self, specs: &[SplitSpec]) -> Result<Tiling, TilingError> {
        let mut tiles = self.tiles.clone();
        for sp in specs {
            if sp.side >= self.region.len() || !sp.size.is_positive() {
                return Err(TilingError::BadSide(sp.side));
            }
            let (start, _) = self.region.edge(sp.side);
            let k = self.region.edge_direction(sp.side);
            let p = start.add(&k.step(&sp.offset));
            let out = k.rotate(-1);
            let verts = if sp.flipped {
                [p.clone(), p.add(&out.step(&sp.size)), p.add(&k.rotate(-2).step(&sp.size))]
            } else {
                [p.clone(), p.add(&k.step(&sp.size)), p.add(&out.step(&sp.size))]
            };
            tiles.push(Tile::from_vertices(&verts).expect("lattice triangle"));
        }
        let region = hull_polygon(
            self.region.vertices().iter().cloned().chain(tiles[self.tiles.len()..].iter().flat_map(|t| t.vertices())),
        )
        .map_err(|_| TilingError::NonConvexResult)?;
        let t = Tiling::new(region, tiles);
        match t.verify().violation {
            None => Ok(t),
            Some(Violation::Gap { .. }) => Err(TilingError::NonConvexResult),
            Some(_) => Err(TilingError::StripMismatch),
        }
    }

    /// Checks the three-tile trapezoid lemma: if every π-vertex lies on the
    /// side joining the two π/3 corners, or there are exactly three tiles,
    /// the tiling has three congruent tiles. Returns whether the hypothesis
    /// applied.
    pub fn check_trapezoid_lemma(&self) -> Result<bool, TilingError> {
        if self.shape() != ShapeClass::Trapezoid {
            return Ok(false);
        }
        let corners = self.region.corners();
        let m = corners.len();
        let side = (0..m)
            .find(|&i| corners[i] == Corner::Sharp && corners[(i + 1) % m] == Corner::Sharp)
            .expect("trapezoid has a sharp-sharp side");
        let (p, q) = self.region.edge(side);
        let on_side = |v: &LatticePoint| {
            let u = q.sub(p);
            let w = v.sub(p);
            crate::geom::cross_sign(&u, &w) == 0
        };
        let alpha = self
            .classify_vertices()
            .iter()
            .filter(|(_, c)| **c == VertexClass::Pi)
            .all(|(v, _)| on_side(v));
        let beta = self.len() == 3;
        if !(alpha || beta) {
            return Ok(false);
        }
        if self.len() != 3 || self.distinct_sizes() != 1 {
            return Err(TilingError::LemmaViolation(format!(
                "trapezoid tiling with n={} s={} satisfies the hypothesis",
                self.len(),
                self.distinct_sizes()
            )));
        }
        Ok(true)
    }
}

/// Smallest convex lattice polygon containing the points.
pub fn hull_polygon<I: IntoIterator<Item = LatticePoint>>(pts: I) -> Result<ConvexLatticePolygon, PolygonError> {
    let pts: Vec<LatticePoint> = pts.into_iter().collect();
    let mm = |f: &dyn Fn(&LatticePoint) -> ExactScalar| {
        let v: Vec<ExactScalar> = pts.iter().map(f).collect();
        (v.iter().min().cloned(), v.iter().max().cloned())
    };
    let bounds = TriBounds { a: mm(&|p| p.a.clone()), b: mm(&|p| p.b.clone()), c: mm(&|p| p.c()) };
    ConvexLatticePolygon::from_bounds(&bounds)
}

fn find_violation(region: &TriBox, tiles: &[ITile]) -> Option<Violation> {
    for (i, t) in tiles.iter().enumerate() {
        if !t.vertices().iter().all(|&v| region.contains_point(v)) {
            return Some(Violation::TileOutsideRegion { tile: i });
        }
    }
    let boxes: Vec<TriBox> = tiles.iter().map(|t| t.tri_box()).collect();
    let mut order: Vec<usize> = (0..tiles.len()).collect();
    order.sort_by_key(|&i| boxes[i].b0);
    let mut first: Option<(Cell, usize, usize)> = None;
    for (x, &i) in order.iter().enumerate() {
        for &j in &order[x + 1..] {
            if boxes[j].b0 >= boxes[i].b1 {
                break;
            }
            let meet = boxes[i].intersect(&boxes[j]).tighten();
            if !meet.has_interior() {
                continue;
            }
            let row = meet.b0;
            let (k, _) = meet.row_cells(row).expect("overlap has a bottom row");
            let cell = Cell { row, k };
            let pair = (i.min(j), i.max(j));
            if first.is_none_or(|(c, ..)| cell < c) {
                first = Some((cell, pair.0, pair.1));
            }
        }
    }
    if let Some((cell, i, j)) = first {
        return Some(Violation::Overlap { cell, tiles: (i, j) });
    }
    let covered: i64 = tiles.iter().map(|t| t.area()).sum();
    if covered == region.area() {
        return None;
    }
    // The lowest uncovered cell sits on a row starting at a tile or region vertex.
    let mut rows: BTreeSet<i64> = BTreeSet::new();
    rows.insert(region.b0);
    for t in tiles {
        for (_, b) in t.vertices() {
            rows.insert(b);
        }
    }
    for j in rows {
        let Some((lo, hi)) = region.row_cells(j) else { continue };
        let mut spans: Vec<(i64, i64)> = boxes.iter().filter_map(|b| b.row_cells(j)).collect();
        spans.sort();
        let mut next = lo;
        for (s, e) in spans {
            if s > next {
                break;
            }
            next = next.max(e + 1);
        }
        if next <= hi {
            return Some(Violation::Gap { cell: Cell { row: j, k: next } });
        }
    }
    unreachable!("area deficit without an uncovered row")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Tile;

    fn quartered() -> Tiling {
        Tiling::from_tiles(vec![Tile::up(0, 0, 1), Tile::up(1, 0, 1), Tile::up(0, 1, 1), Tile::down(0, 1, 1)]).unwrap()
    }

    #[test]
    fn quartered_triangle_valid() {
        let t = quartered();
        assert!(t.verify().valid);
        assert_eq!(t.shape(), ShapeClass::Triangle);
        assert_eq!(t.v_pi(), 3);
        assert_eq!(t.stats().s, 1);
        assert!(!t.is_t_perfect());
        assert_eq!(t.exposed_tiles().len(), 3);
    }

    #[test]
    fn overlap_and_gap() {
        let region = quartered().region().clone();
        let t = Tiling::new(region.clone(), vec![Tile::up(0, 0, 1), Tile::up(0, 0, 1)]);
        let r = t.verify();
        assert!(matches!(r.violation, Some(Violation::Overlap { cell: Cell { row: 0, k: 0 }, .. })));
        let t = Tiling::new(region.clone(), vec![Tile::up(0, 0, 1), Tile::up(1, 0, 1), Tile::up(0, 1, 1)]);
        assert_eq!(t.verify().violation, Some(Violation::Gap { cell: Cell { row: 0, k: 1 } }));
        let t = Tiling::new(region, vec![Tile::up(0, 0, 3)]);
        assert_eq!(t.verify().violation, Some(Violation::TileOutsideRegion { tile: 0 }));
    }

    #[test]
    fn attach_and_cut_are_inverse() {
        let unit = Tiling::from_tiles(vec![Tile::up(0, 0, 1)]).unwrap();
        let rh = unit.attach_triangle(&ExactScalar::one(), Some(0)).unwrap();
        assert_eq!(rh.shape(), ShapeClass::Parallelogram);
        assert_eq!(rh.exposed_tiles().len(), 2);
        let back = rh.cut_exposed(rh.tiles().iter().position(|t| t == &Tile::down(0, 0, 1)).unwrap()).unwrap();
        assert_eq!(back, unit);
        assert!(matches!(
            unit.attach_triangle(&ExactScalar::one(), None),
            Err(TilingError::AmbiguousSide { .. })
        ));
        assert!(matches!(
            unit.attach_triangle(&ExactScalar::from(2), None),
            Err(TilingError::NoMatchingSide(_))
        ));
    }

    #[test]
    fn trapezoid_lemma() {
        let t = quartered();
        let corner = t.tiles().iter().position(|x| x == &Tile::up(0, 1, 1)).unwrap();
        let trap = t.cut_exposed(corner).unwrap();
        assert_eq!(trap.shape(), ShapeClass::Trapezoid);
        assert_eq!(trap.check_trapezoid_lemma(), Ok(true));
    }
}
