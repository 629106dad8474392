//! Explicit tilings: the Padovan spiral pentagons `P_n`, the t-perfect
//! spiral pentagons `Q_n`, polygons derived from both by attaching tiles,
//! the small congruent tilings, and the recipes that grow the shipped
//! hexagon tilings into triangles, trapezoids and parallelograms.

use std::collections::BTreeMap;

use crate::appendix;
use crate::geom::{cross_sign, Corner, LatticePoint, ShapeClass, Tile};
use crate::scalar::ExactScalar;
use crate::search::canonical_key;
use crate::sequences::{p64, q64};
use crate::tiling::{SplitSpec, Tiling, TilingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("n = {0} is outside the range of this construction")]
    InvalidN(usize),
    #[error("unknown variant `{0}`")]
    InvalidVariant(char),
    #[error("no congruent witness for {0} with {1} tiles")]
    NoCanonicalWitness(ShapeClass, usize),
    #[error("no recipe for {0} with {1} tiles")]
    NoRecipe(ShapeClass, usize),
    #[error("several distinct results: {0}")]
    AmbiguousSide(String),
    #[error("result does not match the claim: {0}")]
    ClaimMismatch(String),
    #[error("shipped data: {0}")]
    Data(String),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn sc(v: i64) -> ExactScalar {
    ExactScalar::from(v)
}

/// Vertex index of the unique π/3 corner of a pentagon.
fn sharp_corner(t: &Tiling) -> usize {
    let corners = t.region().corners();
    corners.iter().position(|c| *c == Corner::Sharp).expect("pentagon has a sharp corner")
}

/// In both spiral families the sides run counterclockwise as
/// `f(n), f(n-1), ..., f(n-4)` with the π/3 corner after `f(n)`; this is the
/// index of the side of length `f(n-j)`.
fn spiral_side(t: &Tiling, j: usize) -> usize {
    let m = t.region().len();
    (sharp_corner(t) + m - 1 + j) % m
}

fn normal(side: usize, offset: ExactScalar, size: ExactScalar) -> SplitSpec {
    SplitSpec { side, offset, size, flipped: false }
}

fn flipped(side: usize, offset: ExactScalar, size: ExactScalar) -> SplitSpec {
    SplitSpec { side, offset, size, flipped: true }
}

/// The four-tile spiral pentagon with sides 2, 1, 1, 1, 2.
pub fn p4_seed() -> Tiling {
    Tiling::from_tiles(vec![Tile::down(2, 1, 1), Tile::up(2, 1, 1), Tile::down(1, 2, 1), Tile::up(1, 0, 2)])
        .expect("seed tiles partition a pentagon")
}

/// `P_n`: starting from `P_4`, each step adds a tile of size `p(k)` on the
/// longest side.
pub fn spiral_pentagon(n: usize) -> Result<Tiling> {
    if n < 4 {
        return Err(ConstructionError::InvalidN(n));
    }
    let mut t = p4_seed();
    for k in 4..n {
        let side = spiral_side(&t, 0);
        t = t.attach_split_side(&[normal(side, ExactScalar::zero(), sc(p64(k)))])?;
    }
    Ok(t)
}

/// Polygons derived from `P_n`: (a) triangle with `n + 2` tiles, (b)
/// trapezoid and (c) parallelogram with `n + 1`, (e) hexagon with `n + 3`
/// built from three half-size tiles.
pub fn derived_polygon(n: usize, variant: char) -> Result<Tiling> {
    if n < 4 {
        return Err(ConstructionError::InvalidN(n));
    }
    let t = spiral_pentagon(n)?;
    let p = |j: usize| sc(p64(n - j));
    let zero = ExactScalar::zero;
    let specs = match variant {
        'a' => vec![normal(spiral_side(&t, 4), zero(), p(4)), normal(spiral_side(&t, 2), zero(), p(2))],
        'b' => vec![normal(spiral_side(&t, 4), zero(), p(4))],
        'c' => vec![normal(spiral_side(&t, 3), zero(), p(3))],
        'e' => {
            // a strip of three half-size tiles over the side of length p(n),
            // or over p(n-1) when half of p(n) is already a size
            let j = if n == 6 { 1 } else { 0 };
            let side = spiral_side(&t, j);
            let h = p(j) / sc(2);
            vec![normal(side, zero(), h.clone()), flipped(side, h.clone(), h.clone()), normal(side, h.clone(), h)]
        }
        v => return Err(ConstructionError::InvalidVariant(v)),
    };
    Ok(t.attach_split_side(&specs)?)
}

/// Checks the property the t-perfect spiral relies on: every side length of
/// the base pentagon that occurs as a tile size, other than 8, belongs to a
/// single tile, and that tile has a full side on the boundary side of that
/// length.
pub fn q_base_audit(t: &Tiling) -> bool {
    let lengths = t.region().side_lengths();
    (0..lengths.len()).all(|i| {
        let len = &lengths[i];
        if *len == sc(8) {
            return true;
        }
        let same: Vec<&Tile> = t.tiles().iter().filter(|tile| tile.size == *len).collect();
        if same.is_empty() {
            return true;
        }
        let (p, q) = t.region().edge(i);
        let dir = q.sub(p);
        let on_line = |v: &LatticePoint| cross_sign(&dir, &v.sub(p)) == 0;
        same.len() == 1 && same[0].vertices().iter().filter(|v| on_line(v)).count() == 2
    })
}

/// `Q_12` from the shipped data file.
pub fn q12() -> Result<Tiling> {
    let t = appendix::q12().map_err(|e| ConstructionError::Data(e.to_string()))?;
    t.verify_ok()?;
    Ok(t)
}

/// `Q_n`: starting from `Q_12`, each step adds a tile of size `q(k)` on the
/// side of that length.
pub fn q_pentagon(n: usize) -> Result<Tiling> {
    if n < 12 {
        return Err(ConstructionError::InvalidN(n));
    }
    let mut t = q12()?;
    for k in 12..n {
        let side = spiral_side(&t, 0);
        t = t.attach_split_side(&[normal(side, ExactScalar::zero(), sc(q64(k)))])?;
    }
    Ok(t)
}

/// t-perfect polygons derived from `Q_n`: (a) triangle with `n + 2` tiles
/// (n ≥ 13), (b) trapezoid and (c) parallelogram with `n + 1` (n ≥ 12), (e)
/// hexagon with `n + 5` (n ≥ 12, n ≠ 16).
pub fn t_derived(n: usize, variant: char) -> Result<Tiling> {
    let min = match variant {
        'a' => 13,
        'b' | 'c' | 'e' => 12,
        v => return Err(ConstructionError::InvalidVariant(v)),
    };
    if n < min || (variant == 'e' && n == 16) {
        return Err(ConstructionError::InvalidN(n));
    }
    let t = q_pentagon(n)?;
    let q = |j: usize| sc(q64(n - j));
    let zero = ExactScalar::zero;
    let specs = match variant {
        'a' => vec![normal(spiral_side(&t, 4), zero(), q(4)), normal(spiral_side(&t, 2), zero(), q(2))],
        'b' => vec![normal(spiral_side(&t, 2), zero(), q(2))],
        'c' => vec![normal(spiral_side(&t, 3), zero(), q(3))],
        _ => {
            let (u, v) = (q(2), q(1));
            let d = (v.clone() - u.clone()) / sc(3);
            let s1 = u + d.clone();
            let s2 = v.clone() - d.clone();
            let (su, sv) = (spiral_side(&t, 2), spiral_side(&t, 1));
            vec![
                normal(su, -d.clone(), s1.clone()),
                flipped(su, -d.clone(), s1),
                normal(sv, zero(), s2.clone()),
                flipped(sv, s2.clone(), s2.clone()),
                normal(sv, v - d.clone(), d),
            ]
        }
    };
    Ok(t.attach_split_side(&specs)?)
}

/// Tilings by congruent tiles of the small cases.
pub fn canonical_small(shape: ShapeClass, n: usize) -> Result<Tiling> {
    use ShapeClass::*;
    let tiles = match (shape, n) {
        (Triangle, 1) => vec![Tile::up(0, 0, 1)],
        (Triangle, 4) => vec![Tile::up(0, 0, 1), Tile::up(1, 0, 1), Tile::up(0, 1, 1), Tile::down(0, 1, 1)],
        (Trapezoid, 3) => vec![Tile::up(0, 0, 1), Tile::down(0, 1, 1), Tile::up(1, 0, 1)],
        (Parallelogram, 2) => vec![Tile::up(0, 0, 1), Tile::down(0, 1, 1)],
        (Parallelogram, 4) => vec![Tile::up(0, 0, 1), Tile::down(0, 1, 1), Tile::up(1, 0, 1), Tile::down(1, 1, 1)],
        (Pentagon, 4) => return Ok(p4_seed()),
        (Hexagon, 6) => vec![
            Tile::up(1, 0, 1),
            Tile::down(1, 1, 1),
            Tile::up(0, 1, 1),
            Tile::down(0, 2, 1),
            Tile::up(1, 1, 1),
            Tile::down(0, 1, 1),
        ],
        _ => return Err(ConstructionError::NoCanonicalWitness(shape, n)),
    };
    Ok(Tiling::from_tiles(tiles)?)
}

/// A recipe that grows a shipped hexagon tiling into another shape by
/// adding tiles over sides of matching length, in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recipe {
    pub shape: ShapeClass,
    pub n: usize,
    pub base: char,
    pub sizes: &'static [i64],
}

impl Recipe {
    /// Distinct sizes the result is built to have.
    pub fn claimed_s(&self) -> usize {
        match self.shape {
            ShapeClass::Triangle => self.n - 5,
            _ => self.n - 4,
        }
    }
}

const fn recipe(shape: ShapeClass, n: usize, base: char, sizes: &'static [i64]) -> Recipe {
    Recipe { shape, n, base, sizes }
}

use ShapeClass::{Parallelogram as Par, Trapezoid as Trap, Triangle as Tri};

pub const RECIPES: [Recipe; 31] = [
    recipe(Tri, 15, 'c', &[12, 19, 20, 11]),
    recipe(Tri, 17, 'c', &[12, 19, 28, 39, 20, 28]),
    recipe(Tri, 18, 'j', &[27, 44, 47, 24]),
    recipe(Tri, 19, 'k', &[20, 32, 33, 17]),
    recipe(Tri, 20, 'j', &[27, 44, 67, 91, 47, 67]),
    recipe(Tri, 21, 'm', &[64, 106, 111, 59]),
    recipe(Tri, 22, 'n', &[102, 157, 162, 84]),
    recipe(Tri, 23, 'o', &[138, 213, 220, 114]),
    recipe(Tri, 24, 'n', &[102, 157, 235, 319, 162, 235]),
    recipe(Tri, 25, 'o', &[138, 213, 319, 433, 220, 319]),
    recipe(Tri, 26, 'q', &[325, 533, 534, 283]),
    recipe(Tri, 28, 'q', &[325, 533, 784, 1067, 534, 784]),
    recipe(Trap, 14, 'c', &[12, 19, 20]),
    recipe(Trap, 16, 'c', &[12, 19, 28, 39, 20]),
    recipe(Trap, 17, 'j', &[27, 44, 47]),
    recipe(Trap, 18, 'k', &[20, 32, 33]),
    recipe(Trap, 19, 'j', &[27, 44, 67, 91, 47]),
    recipe(Trap, 20, 'm', &[64, 106, 111]),
    recipe(Trap, 21, 'n', &[102, 157, 162]),
    recipe(Trap, 22, 'o', &[138, 213, 220]),
    recipe(Trap, 23, 'n', &[102, 157, 235, 319, 162]),
    recipe(Trap, 24, 'o', &[138, 213, 319, 433, 220]),
    recipe(Trap, 25, 'q', &[325, 533, 534]),
    recipe(Trap, 27, 'q', &[325, 533, 784, 1067, 534]),
    recipe(Par, 15, 'c', &[12, 19, 28, 20]),
    recipe(Par, 18, 'j', &[27, 44, 67, 47]),
    recipe(Par, 19, 'k', &[20, 32, 48, 33]),
    recipe(Par, 21, 'm', &[64, 106, 158, 111]),
    recipe(Par, 22, 'n', &[102, 157, 235, 162]),
    recipe(Par, 23, 'o', &[138, 213, 319, 220]),
    recipe(Par, 26, 'q', &[325, 533, 784, 534]),
];

pub fn recipe_for(shape: ShapeClass, n: usize) -> Option<&'static Recipe> {
    RECIPES.iter().find(|r| r.shape == shape && r.n == n)
}

/// Applies a recipe. Where several sides match a size, every choice whose
/// result is convex is followed; the recipe must end in a single tiling up
/// to similarity.
pub fn table2_build(shape: ShapeClass, n: usize) -> Result<Tiling> {
    let recipe = recipe_for(shape, n).ok_or(ConstructionError::NoRecipe(shape, n))?;
    let base = appendix::tiling(recipe.base)
        .ok_or(ConstructionError::NoRecipe(shape, n))?
        .map_err(|e| ConstructionError::Data(e.to_string()))?;
    let mut frontier = vec![base];
    for size in recipe.sizes {
        let len = sc(*size);
        let mut next = BTreeMap::new();
        for t in &frontier {
            for side in t.sides_of_length(&len) {
                if let Ok(grown) = t.attach_triangle(&len, Some(side)) {
                    let key = canonical_key(&grown)?;
                    next.entry(key).or_insert(grown);
                }
            }
        }
        if next.is_empty() {
            return Err(TilingError::NoMatchingSide(len).into());
        }
        frontier = next.into_values().collect();
    }
    frontier.retain(|t| t.shape() == shape && t.is_t_perfect());
    match frontier.len() {
        0 => Err(ConstructionError::ClaimMismatch(format!("no {shape} t-perfect result"))),
        1 => {
            let t = frontier.pop().unwrap();
            if t.len() != n || t.distinct_sizes() != recipe.claimed_s() {
                return Err(ConstructionError::ClaimMismatch(format!(
                    "n = {}, s = {}, expected n = {n}, s = {}",
                    t.len(),
                    t.distinct_sizes(),
                    recipe.claimed_s()
                )));
            }
            Ok(t)
        }
        k => Err(ConstructionError::AmbiguousSide(format!("{k} results"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_and_first_steps() {
        let p4 = spiral_pentagon(4).unwrap();
        assert_eq!(p4.region().side_lengths(), [2, 1, 1, 1, 2].map(sc));
        let p8 = spiral_pentagon(8).unwrap();
        let mut sides = p8.region().side_lengths();
        sides.sort();
        assert_eq!(sides, [2, 3, 4, 5, 7].map(sc));
        assert_eq!(p8.distinct_sizes(), 5);
    }

    #[test]
    fn derived_small() {
        let b = derived_polygon(4, 'b').unwrap();
        assert_eq!((b.shape(), b.len(), b.distinct_sizes()), (ShapeClass::Trapezoid, 5, 2));
        let e = derived_polygon(6, 'e').unwrap();
        assert_eq!((e.shape(), e.len()), (ShapeClass::Hexagon, 9));
        assert!(e.tiles().iter().any(|t| t.size == ExactScalar::new(3, 2)));
    }

    #[test]
    fn small_witnesses() {
        for (shape, n) in [
            (ShapeClass::Triangle, 1),
            (ShapeClass::Triangle, 4),
            (ShapeClass::Trapezoid, 3),
            (ShapeClass::Parallelogram, 2),
            (ShapeClass::Parallelogram, 4),
            (ShapeClass::Pentagon, 4),
            (ShapeClass::Hexagon, 6),
        ] {
            let t = canonical_small(shape, n).unwrap();
            assert_eq!((t.shape(), t.len()), (shape, n));
        }
        assert!(canonical_small(ShapeClass::Hexagon, 7).is_err());
    }
}
