//! Triangular-lattice geometry.
//!
//! Points are written in the basis `e1 = (1, 0)`, `e2 = (1/2, √3/2)`, so a
//! lattice point `(a, b)` sits at Cartesian `(a + b/2, b·√3/2)`. Every
//! Cartesian y-coordinate carries the common factor `√3/2`; cross products
//! of lattice vectors are `(a1·b2 − a2·b1)·√3/2` and dot products are
//! `a1·a2 + b1·b2 + (a1·b2 + a2·b1)/2`, so all orientation and angle tests are
//! rational sign tests.

use std::fmt;

use serde::Serialize;

use crate::scalar::ExactScalar;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub a: ExactScalar,
    pub b: ExactScalar,
}

impl LatticePoint {
    pub fn new(a: impl Into<ExactScalar>, b: impl Into<ExactScalar>) -> Self {
        LatticePoint { a: a.into(), b: b.into() }
    }

    pub fn origin() -> Self {
        LatticePoint::new(0, 0)
    }

    /// `a + b`, the third lattice coordinate.
    pub fn c(&self) -> ExactScalar {
        &self.a + &self.b
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint { a: &self.a + &other.a, b: &self.b + &other.b }
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint { a: &self.a - &other.a, b: &self.b - &other.b }
    }

    pub fn scale(&self, k: &ExactScalar) -> LatticePoint {
        LatticePoint { a: &self.a * k, b: &self.b * k }
    }

    /// Key for the scan order used throughout: `b` first, then `a`.
    pub fn ba_key(&self) -> (&ExactScalar, &ExactScalar) {
        (&self.b, &self.a)
    }

    pub fn apply(&self, sym: Symmetry) -> LatticePoint {
        let (mut a, mut b) = (self.a.clone(), self.b.clone());
        if sym.reflect {
            let na = &a + &b;
            b = -b;
            a = na;
        }
        for _ in 0..sym.rotation {
            let na = -&b;
            let nb = &a + &b;
            a = na;
            b = nb;
        }
        LatticePoint { a, b }
    }

    /// Cartesian coordinates; floats are only meant for rendering.
    pub fn to_cartesian(&self) -> (f64, f64) {
        let a = self.a.to_f64();
        let b = self.b.to_f64();
        (a + b / 2.0, b * 3f64.sqrt() / 2.0)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Sign of the Cartesian cross product `u × v`.
pub fn cross_sign(u: &LatticePoint, v: &LatticePoint) -> i32 {
    (&u.a * &v.b - &u.b * &v.a).signum()
}

/// Sign of the Cartesian dot product `u · v`.
pub fn dot_sign(u: &LatticePoint, v: &LatticePoint) -> i32 {
    let two = ExactScalar::from(2);
    let d = &two * &(&u.a * &v.a) + &two * &(&u.b * &v.b) + &u.a * &v.b + &v.a * &u.b;
    d.signum()
}

/// One of the six lattice directions, numbered counterclockwise from `e1`
/// (direction `k` points at angle `k·60°`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(pub u8);

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction(0),
        Direction(1),
        Direction(2),
        Direction(3),
        Direction(4),
        Direction(5),
    ];

    pub fn vector(self) -> (i64, i64) {
        match self.0 % 6 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 1),
            3 => (-1, 0),
            4 => (0, -1),
            _ => (1, -1),
        }
    }

    pub fn rotate(self, steps: i32) -> Direction {
        Direction(((self.0 as i32 + steps).rem_euclid(6)) as u8)
    }

    pub fn opposite(self) -> Direction {
        self.rotate(3)
    }

    /// Direction and lattice length of `v`, if `v` is a nonzero multiple of a
    /// lattice direction.
    pub fn of_vector(v: &LatticePoint) -> Option<(Direction, ExactScalar)> {
        let (a, b) = (&v.a, &v.b);
        let k = if b.is_zero() && a.is_positive() {
            0
        } else if a.is_zero() && b.is_positive() {
            1
        } else if (a + b).is_zero() && b.is_positive() {
            2
        } else if b.is_zero() && a.is_negative() {
            3
        } else if a.is_zero() && b.is_negative() {
            4
        } else if (a + b).is_zero() && b.is_negative() {
            5
        } else {
            return None;
        };
        let len = if a.is_zero() { b.abs() } else { a.abs() };
        Some((Direction(k), len))
    }

    pub fn step(self, len: &ExactScalar) -> LatticePoint {
        let (da, db) = self.vector();
        LatticePoint { a: len * &ExactScalar::from(da), b: len * &ExactScalar::from(db) }
    }
}

/// One of the twelve symmetries of the triangular lattice fixing the origin:
/// an optional reflection in the `e1` axis followed by `rotation` turns of 60°.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub reflect: bool,
    pub rotation: u8,
}

impl Symmetry {
    pub fn all() -> impl Iterator<Item = Symmetry> {
        (0..12u8).map(|g| Symmetry { reflect: g >= 6, rotation: g % 6 })
    }

    pub fn identity() -> Self {
        Symmetry { reflect: false, rotation: 0 }
    }

    pub fn apply_int(self, (mut a, mut b): (i64, i64)) -> (i64, i64) {
        if self.reflect {
            let na = a + b;
            b = -b;
            a = na;
        }
        for _ in 0..self.rotation {
            let na = -b;
            let nb = a + b;
            a = na;
            b = nb;
        }
        (a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn letter(self) -> char {
        match self {
            Orientation::Up => 'U',
            Orientation::Down => 'D',
        }
    }
}

/// An equilateral lattice triangle.
///
/// Up tiles have vertices `anchor, anchor+(s,0), anchor+(0,s)`; Down tiles
/// have `anchor, anchor+(s,−s), anchor+(s,0)`. The anchor of an Up tile is
/// its lowest-leftmost vertex, the anchor of a Down tile its top-left vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    pub orient: Orientation,
    pub anchor: LatticePoint,
    pub size: ExactScalar,
}

impl Tile {
    pub fn new(orient: Orientation, anchor: LatticePoint, size: ExactScalar) -> Tile {
        assert!(size.is_positive(), "tile size must be positive");
        Tile { orient, anchor, size }
    }

    pub fn up(a: impl Into<ExactScalar>, b: impl Into<ExactScalar>, size: impl Into<ExactScalar>) -> Tile {
        Tile::new(Orientation::Up, LatticePoint::new(a, b), size.into())
    }

    pub fn down(a: impl Into<ExactScalar>, b: impl Into<ExactScalar>, size: impl Into<ExactScalar>) -> Tile {
        Tile::new(Orientation::Down, LatticePoint::new(a, b), size.into())
    }

    /// The three vertices in counterclockwise order, starting at the anchor.
    pub fn vertices(&self) -> [LatticePoint; 3] {
        let s = &self.size;
        let p = &self.anchor;
        match self.orient {
            Orientation::Up => [
                p.clone(),
                LatticePoint { a: &p.a + s, b: p.b.clone() },
                LatticePoint { a: p.a.clone(), b: &p.b + s },
            ],
            Orientation::Down => [
                p.clone(),
                LatticePoint { a: &p.a + s, b: &p.b - s },
                LatticePoint { a: &p.a + s, b: p.b.clone() },
            ],
        }
    }

    /// Rebuilds a tile from its vertex set, if the points form a lattice
    /// equilateral triangle.
    pub fn from_vertices(pts: &[LatticePoint; 3]) -> Option<Tile> {
        let mut v = pts.to_vec();
        v.sort_by(|p, q| p.ba_key().cmp(&q.ba_key()));
        let size = if v[0].b == v[1].b {
            &v[1].a - &v[0].a
        } else if v[1].b == v[2].b {
            &v[2].a - &v[1].a
        } else {
            return None;
        };
        if !size.is_positive() {
            return None;
        }
        let cand = if v[0].b == v[1].b {
            Tile::new(Orientation::Up, v[0].clone(), size)
        } else {
            Tile::new(Orientation::Down, v[1].clone(), size)
        };
        let mut w = cand.vertices().to_vec();
        w.sort_by(|p, q| p.ba_key().cmp(&q.ba_key()));
        (w == v).then_some(cand)
    }

    pub fn centroid(&self) -> LatticePoint {
        let third = &self.size / &ExactScalar::from(3);
        match self.orient {
            Orientation::Up => LatticePoint { a: &self.anchor.a + &third, b: &self.anchor.b + &third },
            Orientation::Down => LatticePoint {
                a: &self.anchor.a + &(&third + &third),
                b: &self.anchor.b - &third,
            },
        }
    }

    pub fn apply(&self, sym: Symmetry) -> Tile {
        let v = self.vertices();
        let w = [v[0].apply(sym), v[1].apply(sym), v[2].apply(sym)];
        Tile::from_vertices(&w).expect("lattice symmetries map tiles to tiles")
    }

    pub fn translate(&self, by: &LatticePoint) -> Tile {
        Tile { orient: self.orient, anchor: self.anchor.add(by), size: self.size.clone() }
    }

    pub fn scale(&self, k: &ExactScalar) -> Tile {
        Tile { orient: self.orient, anchor: self.anchor.scale(k), size: &self.size * k }
    }

    pub fn bounds(&self) -> TriBounds {
        let p = &self.anchor;
        let s = &self.size;
        match self.orient {
            Orientation::Up => TriBounds {
                a: (Some(p.a.clone()), None),
                b: (Some(p.b.clone()), None),
                c: (None, Some(p.c() + s)),
            },
            Orientation::Down => TriBounds {
                a: (None, Some(&p.a + s)),
                b: (None, Some(p.b.clone())),
                c: (Some(p.c()), None),
            },
        }
    }

    /// Canonical sort key: anchor in `(b, a)` order, then orientation, then size.
    pub fn sort_key(&self) -> (&ExactScalar, &ExactScalar, Orientation, &ExactScalar) {
        (&self.anchor.b, &self.anchor.a, self.orient, &self.size)
    }
}

impl fmt::Debug for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}x{}", self.orient.letter(), self.anchor, self.size)
    }
}

impl PartialOrd for Tile {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tile {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// A convex lattice polygon described by bounds on the three coordinates
/// `a`, `b` and `c = a + b`; `None` means unbounded on that side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriBounds {
    pub a: (Option<ExactScalar>, Option<ExactScalar>),
    pub b: (Option<ExactScalar>, Option<ExactScalar>),
    pub c: (Option<ExactScalar>, Option<ExactScalar>),
}

impl TriBounds {
    pub fn contains(&self, p: &LatticePoint) -> bool {
        let within = |v: &ExactScalar, (lo, hi): &(Option<ExactScalar>, Option<ExactScalar>)| {
            lo.as_ref().is_none_or(|l| v >= l) && hi.as_ref().is_none_or(|h| v <= h)
        };
        within(&p.a, &self.a) && within(&p.b, &self.b) && within(&p.c(), &self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ShapeClass {
    Triangle,
    Trapezoid,
    Parallelogram,
    Pentagon,
    Hexagon,
}

impl ShapeClass {
    pub const ALL: [ShapeClass; 5] = [
        ShapeClass::Triangle,
        ShapeClass::Trapezoid,
        ShapeClass::Parallelogram,
        ShapeClass::Pentagon,
        ShapeClass::Hexagon,
    ];

    pub fn vertex_count(self) -> usize {
        match self {
            ShapeClass::Triangle => 3,
            ShapeClass::Trapezoid | ShapeClass::Parallelogram => 4,
            ShapeClass::Pentagon => 5,
            ShapeClass::Hexagon => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ShapeClass::Triangle => "triangle",
            ShapeClass::Trapezoid => "trapezoid",
            ShapeClass::Parallelogram => "parallelogram",
            ShapeClass::Pentagon => "pentagon",
            ShapeClass::Hexagon => "hexagon",
        }
    }

    /// Accepts full names and the short forms `tri`, `trap`, `par`, `pent`, `hex`.
    pub fn parse(s: &str) -> Option<ShapeClass> {
        match s.to_ascii_lowercase().as_str() {
            "tri" | "triangle" => Some(ShapeClass::Triangle),
            "trap" | "trapezoid" | "tra" => Some(ShapeClass::Trapezoid),
            "par" | "parallelogram" => Some(ShapeClass::Parallelogram),
            "pent" | "pentagon" | "pen" => Some(ShapeClass::Pentagon),
            "hex" | "hexagon" => Some(ShapeClass::Hexagon),
            _ => None,
        }
    }
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolygonError {
    #[error("polygon needs at least three vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge {index} is not along a lattice direction")]
    NonLatticeEdge { index: usize },
    #[error("vertices {index} and its successor coincide")]
    DegenerateEdge { index: usize },
    #[error("vertex {index} is not a convex π/3 or 2π/3 corner")]
    BadAngle { index: usize },
    #[error("vertex loop is not a simple counterclockwise polygon")]
    NotSimple,
}

/// Interior angle of a polygon corner, in units of π/3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Corner {
    Sharp,
    Obtuse,
}

/// A convex polygon whose edges follow lattice directions and whose
/// interior angles are π/3 or 2π/3. Vertices are stored counterclockwise,
/// starting at the least vertex in `(b, a)` order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConvexLatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl fmt::Debug for ConvexLatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vertices).finish()
    }
}

impl ConvexLatticePolygon {
    /// Validates a counterclockwise vertex loop. Collinear intermediate
    /// vertices are rejected; use [`ConvexLatticePolygon::from_loop`] to merge them.
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self, PolygonError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices(n));
        }
        let mut dirs = Vec::with_capacity(n);
        for i in 0..n {
            let d = vertices[(i + 1) % n].sub(&vertices[i]);
            if d.a.is_zero() && d.b.is_zero() {
                return Err(PolygonError::DegenerateEdge { index: i });
            }
            let (dir, _) = Direction::of_vector(&d).ok_or(PolygonError::NonLatticeEdge { index: i })?;
            dirs.push(dir);
        }
        let mut total = 0;
        for i in 0..n {
            let turn = (dirs[i].0 as i32 - dirs[(i + n - 1) % n].0 as i32).rem_euclid(6);
            if turn != 1 && turn != 2 {
                return Err(PolygonError::BadAngle { index: i });
            }
            total += turn;
        }
        if total != 6 {
            return Err(PolygonError::NotSimple);
        }
        let start = (0..n)
            .min_by(|&i, &j| vertices[i].ba_key().cmp(&vertices[j].ba_key()))
            .unwrap();
        let mut v = vertices;
        v.rotate_left(start);
        Ok(ConvexLatticePolygon { vertices: v })
    }

    /// Like [`ConvexLatticePolygon::new`] but drops repeated and collinear vertices first.
    pub fn from_loop(vertices: Vec<LatticePoint>) -> Result<Self, PolygonError> {
        let mut v: Vec<LatticePoint> = Vec::with_capacity(vertices.len());
        for p in vertices {
            if v.last() != Some(&p) {
                v.push(p);
            }
        }
        while v.len() > 1 && v.first() == v.last() {
            v.pop();
        }
        loop {
            let n = v.len();
            if n < 3 {
                return Err(PolygonError::TooFewVertices(n));
            }
            let drop = (0..n).find(|&i| {
                let prev = &v[(i + n - 1) % n];
                let next = &v[(i + 1) % n];
                let u = v[i].sub(prev);
                let w = next.sub(&v[i]);
                cross_sign(&u, &w) == 0 && dot_sign(&u, &w) > 0
            });
            match drop {
                Some(i) => {
                    v.remove(i);
                }
                None => break,
            }
        }
        ConvexLatticePolygon::new(v)
    }

    /// The polygon cut out by the given coordinate bounds (which must be bounded).
    pub fn from_bounds(bounds: &TriBounds) -> Result<Self, PolygonError> {
        let (Some(a0), Some(a1)) = bounds.a.clone() else { return Err(PolygonError::NotSimple) };
        let (Some(b0), Some(b1)) = bounds.b.clone() else { return Err(PolygonError::NotSimple) };
        let (Some(c0), Some(c1)) = bounds.c.clone() else { return Err(PolygonError::NotSimple) };
        // Walk the six constraint lines counterclockwise, clipping each corner.
        let clamp = |x: ExactScalar, lo: &ExactScalar, hi: &ExactScalar| -> ExactScalar {
            if &x < lo {
                lo.clone()
            } else if &x > hi {
                hi.clone()
            } else {
                x
            }
        };
        let pts = vec![
            // b = b0, from left (c = c0) to right (a = a1)
            LatticePoint { a: clamp(&c0 - &b0, &a0, &a1), b: b0.clone() },
            LatticePoint { a: clamp(&c1 - &b0, &a0, &a1), b: b0.clone() },
            // a = a1, going up to c = c1
            LatticePoint { a: a1.clone(), b: clamp(&c1 - &a1, &b0, &b1) },
            // c = c1, going up-left to b = b1
            LatticePoint { a: clamp(&c1 - &b1, &a0, &a1), b: b1.clone() },
            // b = b1, going left to a = a0
            LatticePoint { a: a0.clone(), b: b1.clone() },
            // a = a0 down to c = c0
            LatticePoint { a: a0.clone(), b: clamp(&c0 - &a0, &b0, &b1) },
        ];
        let mut fixed = Vec::new();
        // the two points on a = a1 and b = b1 need both their coordinates clamped
        for p in pts {
            let a = clamp(p.a.clone(), &a0, &a1);
            let b = clamp(p.b.clone(), &b0, &b1);
            let q = LatticePoint { a, b };
            if bounds.contains(&q) {
                fixed.push(q);
            }
        }
        ConvexLatticePolygon::from_loop(fixed)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed edge `i`, from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> (&LatticePoint, &LatticePoint) {
        let n = self.vertices.len();
        (&self.vertices[i % n], &self.vertices[(i + 1) % n])
    }

    pub fn edge_direction(&self, i: usize) -> Direction {
        let (p, q) = self.edge(i);
        Direction::of_vector(&q.sub(p)).expect("validated").0
    }

    /// Lattice lengths of the edges, counterclockwise from the canonical vertex.
    pub fn side_lengths(&self) -> Vec<ExactScalar> {
        (0..self.len())
            .map(|i| {
                let (p, q) = self.edge(i);
                Direction::of_vector(&q.sub(p)).expect("validated").1
            })
            .collect()
    }

    /// Interior angle at vertex `i`, decided by the sign of the dot product
    /// of the two edge vectors leaving the vertex.
    pub fn corner(&self, i: usize) -> Corner {
        let n = self.len();
        let v = &self.vertices[i % n];
        let u = self.vertices[(i + n - 1) % n].sub(v);
        let w = self.vertices[(i + 1) % n].sub(v);
        if dot_sign(&u, &w) > 0 {
            Corner::Sharp
        } else {
            Corner::Obtuse
        }
    }

    pub fn corners(&self) -> Vec<Corner> {
        (0..self.len()).map(|i| self.corner(i)).collect()
    }

    pub fn classify(&self) -> ShapeClass {
        classify_corners(&self.corners()).expect("validated polygons have a class")
    }

    pub fn bounds(&self) -> TriBounds {
        let min_max = |f: &dyn Fn(&LatticePoint) -> ExactScalar| {
            let vals: Vec<ExactScalar> = self.vertices.iter().map(f).collect();
            (
                Some(vals.iter().min().unwrap().clone()),
                Some(vals.iter().max().unwrap().clone()),
            )
        };
        TriBounds { a: min_max(&|p| p.a.clone()), b: min_max(&|p| p.b.clone()), c: min_max(&|p| p.c()) }
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.bounds().contains(p)
    }

    /// Whether `p` lies on the boundary (assuming it is contained).
    pub fn on_boundary(&self, p: &LatticePoint) -> bool {
        (0..self.len()).any(|i| {
            let (s, t) = self.edge(i);
            let u = t.sub(s);
            let w = p.sub(s);
            cross_sign(&u, &w) == 0 && dot_sign(&u, &w) >= 0 && dot_sign(&p.sub(t), &s.sub(t)) >= 0
        })
    }

    /// Area in unit cells (each unit triangle counts 1).
    pub fn area_cells(&self) -> ExactScalar {
        // Shoelace in lattice coordinates gives twice the area in units of
        // the fundamental parallelogram, i.e. the cell count.
        let n = self.len();
        let mut acc = ExactScalar::zero();
        for i in 0..n {
            let p = &self.vertices[i];
            let q = &self.vertices[(i + 1) % n];
            acc = acc + (&p.a * &q.b - &p.b * &q.a);
        }
        acc
    }

    pub fn apply(&self, sym: Symmetry) -> ConvexLatticePolygon {
        let mut pts: Vec<LatticePoint> = self.vertices.iter().map(|p| p.apply(sym)).collect();
        if sym.reflect {
            pts.reverse();
        }
        ConvexLatticePolygon::new(pts).expect("symmetry preserves validity")
    }

    pub fn translate(&self, by: &LatticePoint) -> ConvexLatticePolygon {
        ConvexLatticePolygon { vertices: self.vertices.iter().map(|p| p.add(by)).collect() }
    }

    pub fn scale(&self, k: &ExactScalar) -> ConvexLatticePolygon {
        assert!(k.is_positive());
        ConvexLatticePolygon { vertices: self.vertices.iter().map(|p| p.scale(k)).collect() }
    }

    /// φ_w: total length of edges with outer normal `+w` minus those with
    /// outer normal `−w`. Axis `j` has `+w` equal to the outer normal of
    /// edges running in direction `j`.
    pub fn side_balance(&self, axis: NormalAxis) -> ExactScalar {
        let lengths = self.side_lengths();
        let mut acc = ExactScalar::zero();
        for (i, len) in lengths.iter().enumerate() {
            let d = self.edge_direction(i).0;
            if d == axis.0 {
                acc = acc + len;
            } else if d == axis.0 + 3 {
                acc = acc - len;
            }
        }
        acc
    }
}

/// Shape class from a cyclic corner pattern.
pub fn classify_corners(corners: &[Corner]) -> Option<ShapeClass> {
    let sharp = corners.iter().filter(|c| **c == Corner::Sharp).count();
    match (corners.len(), sharp) {
        (3, 3) => Some(ShapeClass::Triangle),
        (4, 2) => {
            let alternating = (0..4).all(|i| corners[i] != corners[(i + 1) % 4]);
            Some(if alternating { ShapeClass::Parallelogram } else { ShapeClass::Trapezoid })
        }
        (5, 1) => Some(ShapeClass::Pentagon),
        (6, 0) => Some(ShapeClass::Hexagon),
        _ => None,
    }
}

/// One of the three normal axes of the lattice directions; see
/// [`ConvexLatticePolygon::side_balance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalAxis(pub u8);

impl NormalAxis {
    pub const ALL: [NormalAxis; 3] = [NormalAxis(0), NormalAxis(1), NormalAxis(2)];
}

/// Side balance of a single tile. Up tiles contribute `+s, −s, +s` on the
/// three axes and Down tiles the negation.
pub fn tile_balance(tile: &Tile, axis: NormalAxis) -> ExactScalar {
    let sign = match (tile.orient, axis.0) {
        (Orientation::Up, 1) | (Orientation::Down, 0) | (Orientation::Down, 2) => -1,
        _ => 1,
    };
    &tile.size * &ExactScalar::from(sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64) -> LatticePoint {
        LatticePoint::new(a, b)
    }

    fn poly(v: &[(i64, i64)]) -> ConvexLatticePolygon {
        ConvexLatticePolygon::new(v.iter().map(|&(a, b)| pt(a, b)).collect()).unwrap()
    }

    #[test]
    fn tile_vertex_conventions() {
        assert_eq!(Tile::up(0, 0, 1).vertices(), [pt(0, 0), pt(1, 0), pt(0, 1)]);
        assert_eq!(Tile::down(0, 0, 2).vertices(), [pt(0, 0), pt(2, -2), pt(2, 0)]);
        let t = Tile::up(ExactScalar::new(1, 2), 0, ExactScalar::new(3, 2));
        assert_eq!(
            t.vertices(),
            [
                LatticePoint::new(ExactScalar::new(1, 2), 0),
                LatticePoint::new(2, 0),
                LatticePoint::new(ExactScalar::new(1, 2), ExactScalar::new(3, 2)),
            ]
        );
    }

    #[test]
    fn tile_vertices_are_ccw() {
        for t in [Tile::up(3, -1, 2), Tile::down(-2, 5, 3)] {
            let v = t.vertices();
            assert_eq!(cross_sign(&v[1].sub(&v[0]), &v[2].sub(&v[0])), 1);
        }
    }

    #[test]
    fn from_vertices_roundtrip() {
        for t in [Tile::up(3, -1, 2), Tile::down(-2, 5, 3)] {
            assert_eq!(Tile::from_vertices(&t.vertices()), Some(t.clone()));
        }
        assert_eq!(Tile::from_vertices(&[pt(0, 0), pt(1, 0), pt(1, 1)]), None);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(poly(&[(0, 0), (1, 0), (0, 1)]).classify(), ShapeClass::Triangle);
        let trap = poly(&[(0, 0), (3, 0), (2, 1), (0, 1)]);
        assert_eq!(trap.corners(), vec![Corner::Sharp, Corner::Sharp, Corner::Obtuse, Corner::Obtuse]);
        assert_eq!(trap.classify(), ShapeClass::Trapezoid);
        let hex = poly(&[(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]);
        assert_eq!(hex.classify(), ShapeClass::Hexagon);
        assert_eq!(poly(&[(0, 0), (2, 0), (2, 1), (0, 1)]).classify(), ShapeClass::Parallelogram);
    }

    #[test]
    fn rejects_bad_loops() {
        let bad = |v: &[(i64, i64)]| ConvexLatticePolygon::new(v.iter().map(|&(a, b)| pt(a, b)).collect());
        assert!(matches!(bad(&[(0, 0), (1, 0)]), Err(PolygonError::TooFewVertices(2))));
        assert!(matches!(bad(&[(0, 0), (2, 0), (0, 1)]), Err(PolygonError::NonLatticeEdge { .. })));
        // clockwise loop
        assert!(bad(&[(0, 0), (0, 1), (1, 0)]).is_err());
        // collinear middle vertex
        assert!(bad(&[(0, 0), (1, 0), (2, 0), (0, 2)]).is_err());
        // reflex corner
        assert!(bad(&[(0, 0), (2, 0), (1, 1), (1, 2), (0, 2)]).is_err());
    }

    #[test]
    fn canonical_start_and_sides() {
        let p = poly(&[(0, 1), (0, 0), (1, 0)]);
        assert_eq!(p.vertices()[0], pt(0, 0));
        assert_eq!(p.side_lengths(), vec![ExactScalar::from(1); 3]);
    }

    #[test]
    fn side_balance_examples() {
        let rhombus = poly(&[(0, 0), (3, 0), (3, 3), (0, 3)]);
        for w in NormalAxis::ALL {
            assert!(rhombus.side_balance(w).is_zero());
        }
        let tri = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(tri.side_balance(NormalAxis(0)), 1);
        let hex = poly(&[(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]);
        for w in NormalAxis::ALL {
            assert!(hex.side_balance(w).is_zero());
        }
    }

    #[test]
    fn bounds_roundtrip() {
        let hex = poly(&[(2, 0), (5, 0), (5, 1), (3, 3), (0, 3), (0, 2)]);
        assert_eq!(ConvexLatticePolygon::from_bounds(&hex.bounds()).unwrap(), hex);
        let tri = poly(&[(0, 0), (4, 0), (0, 4)]);
        assert_eq!(ConvexLatticePolygon::from_bounds(&tri.bounds()).unwrap(), tri);
    }

    #[test]
    fn area_in_cells() {
        assert_eq!(poly(&[(0, 0), (2, 0), (0, 2)]).area_cells(), 4);
        assert_eq!(poly(&[(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]).area_cells(), 6);
    }

    #[test]
    fn symmetry_group_closure() {
        let p = pt(2, 1);
        let images: std::collections::HashSet<_> = Symmetry::all().map(|g| p.apply(g)).collect();
        assert_eq!(images.len(), 12);
        for g in Symmetry::all() {
            assert_eq!(g.apply_int((2, 1)), {
                let q = p.apply(g);
                (q.a.to_i64().unwrap(), q.b.to_i64().unwrap())
            });
        }
    }
}
