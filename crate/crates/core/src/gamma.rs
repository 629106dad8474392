//! The bipartite plane graph of a tiling: one white node per tile (at its
//! centroid), one black node per tiling vertex other than the π/3 corners of
//! the region, and an edge from each tile to each of its own vertices.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::geom::Corner;
use crate::lattice::ITile;
use crate::tiling::{Tiling, TilingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GammaError {
    #[error("the graph needs at least two tiles")]
    TooFewTiles,
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("degree invariant violated: {0}")]
    DegreeInvariantViolation(String),
    #[error("face invariant violated: {0}")]
    FaceInvariantViolation(String),
    #[error("lemma violated: {0}")]
    LemmaViolation(String),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    /// Node positions in the integer frame; the first `whites` nodes are tiles.
    pub pos: Vec<(i64, i64)>,
    pub whites: usize,
    /// Neighbours of each node in counterclockwise angular order.
    pub adj: Vec<Vec<usize>>,
    /// Vertex count of the region.
    pub m: usize,
    pub v_pi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceCensus {
    /// Face counts by length over all faces, the unbounded one included.
    pub histogram: BTreeMap<usize, usize>,
    /// Face counts by length over the bounded faces only.
    pub bounded: BTreeMap<usize, usize>,
    pub outer_len: usize,
    pub v: usize,
    pub e: usize,
    pub f: usize,
}

impl FaceCensus {
    pub fn f(&self, len: usize) -> usize {
        self.histogram.get(&len).copied().unwrap_or(0)
    }

    pub fn bounded_f4(&self) -> usize {
        self.bounded.get(&4).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeCensus {
    pub v2: usize,
    pub v3: usize,
    pub v6: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairBoundReport {
    pub m: usize,
    pub v_pi: usize,
    pub pairs: usize,
    /// `pairs − (m + v_π − 3)`; never negative.
    pub margin: i64,
    pub bounded_f4: usize,
    pub f4_equals_pairs: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaCensus {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub v2: usize,
    pub v3: usize,
    pub v6: usize,
    pub f_2i: BTreeMap<usize, usize>,
    pub bounded_f_2i: BTreeMap<usize, usize>,
    pub outer_len: usize,
    pub pairs: usize,
    pub pair_margin: i64,
}

fn half(v: (i64, i64)) -> u8 {
    // Cartesian y has the sign of b, x the sign of 2a + b.
    let (a, b) = v;
    if b > 0 || (b == 0 && 2 * a + b > 0) {
        0
    } else {
        1
    }
}

fn angle_cmp(u: (i64, i64), v: (i64, i64)) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| {
        let cross = (u.0 as i128) * (v.1 as i128) - (u.1 as i128) * (v.0 as i128);
        0.cmp(&cross)
    })
}

pub fn build_gamma(t: &Tiling) -> Result<IncidenceGraph, GammaError> {
    if t.len() < 2 {
        return Err(GammaError::TooFewTiles);
    }
    let scale = t.denominator() * BigInt::from(3);
    let tiles: Vec<ITile> = t
        .tiles()
        .iter()
        .map(|x| ITile::from_tile(x, &scale))
        .collect::<Option<_>>()
        .ok_or(TilingError::Overflow)?;
    let region = t.region();
    let sharp: Vec<(i64, i64)> = region
        .vertices()
        .iter()
        .zip(region.corners())
        .filter(|(_, c)| *c == Corner::Sharp)
        .map(|(v, _)| {
            let s = crate::scalar::ExactScalar::from(scale.clone());
            ((&v.a * &s).to_i64().unwrap(), (&v.b * &s).to_i64().unwrap())
        })
        .collect();
    let mut pos: Vec<(i64, i64)> = tiles
        .iter()
        .map(|x| {
            let third = x.s / 3;
            if x.up {
                (x.a + third, x.b + third)
            } else {
                (x.a + 2 * third, x.b - third)
            }
        })
        .collect();
    let whites = pos.len();
    let mut index: HashMap<(i64, i64), usize> = HashMap::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); whites];
    for (w, x) in tiles.iter().enumerate() {
        for v in x.vertices() {
            if sharp.contains(&v) {
                continue;
            }
            let id = *index.entry(v).or_insert_with(|| {
                pos.push(v);
                adj.push(Vec::new());
                pos.len() - 1
            });
            adj[w].push(id);
            adj[id].push(w);
        }
    }
    for (u, list) in adj.iter_mut().enumerate() {
        let p = pos[u];
        list.sort_by(|&x, &y| angle_cmp((pos[x].0 - p.0, pos[x].1 - p.1), (pos[y].0 - p.0, pos[y].1 - p.1)));
    }
    Ok(IncidenceGraph { pos, whites, adj, m: region.len(), v_pi: t.v_pi() })
}

impl IncidenceGraph {
    pub fn node_count(&self) -> usize {
        self.pos.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn components(&self) -> usize {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Faces as dart cycles. Leaving each node through the clockwise
    /// successor of the arrival edge keeps the face on the left, so bounded
    /// faces run counterclockwise and the unbounded face clockwise.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
        for (u, list) in self.adj.iter().enumerate() {
            for (i, &w) in list.iter().enumerate() {
                slot.insert((w, u), i);
            }
        }
        let mut used: HashMap<(usize, usize), bool> = HashMap::new();
        let mut faces = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if used.contains_key(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut x, mut y) = (u, v);
                while !used.contains_key(&(x, y)) {
                    used.insert((x, y), true);
                    face.push(x);
                    let i = slot[&(x, y)];
                    let d = self.adj[y].len();
                    let z = self.adj[y][(i + d - 1) % d];
                    x = y;
                    y = z;
                }
                faces.push(face);
            }
        }
        faces
    }

    fn signed_area2(&self, face: &[usize]) -> i128 {
        let n = face.len();
        (0..n)
            .map(|i| {
                let p = self.pos[face[i]];
                let q = self.pos[face[(i + 1) % n]];
                p.0 as i128 * q.1 as i128 - p.1 as i128 * q.0 as i128
            })
            .sum()
    }

    pub fn degree_census(&self) -> Result<DegreeCensus, GammaError> {
        let mut c = DegreeCensus { v2: 0, v3: 0, v6: 0 };
        for (u, list) in self.adj.iter().enumerate() {
            match list.len() {
                2 => c.v2 += 1,
                3 => c.v3 += 1,
                6 => c.v6 += 1,
                d => {
                    return Err(GammaError::DegreeInvariantViolation(format!("node {u} has degree {d}")));
                }
            }
        }
        if c.v2 != self.m {
            return Err(GammaError::DegreeInvariantViolation(format!("v2 = {} but m = {}", c.v2, self.m)));
        }
        if 2 * self.edge_count() != 2 * c.v2 + 3 * c.v3 + 6 * c.v6 {
            return Err(GammaError::DegreeInvariantViolation("handshake sum".into()));
        }
        Ok(c)
    }

    pub fn face_census(&self) -> Result<FaceCensus, GammaError> {
        let comps = self.components();
        if comps != 1 {
            return Err(GammaError::Disconnected(comps));
        }
        let faces = self.faces();
        let mut histogram = BTreeMap::new();
        let mut bounded = BTreeMap::new();
        let mut outer = Vec::new();
        for face in &faces {
            *histogram.entry(face.len()).or_insert(0) += 1;
            if self.signed_area2(face) < 0 {
                outer.push(face.len());
            } else {
                *bounded.entry(face.len()).or_insert(0) += 1;
            }
        }
        let fail = |m: String| Err(GammaError::FaceInvariantViolation(m));
        if outer.len() != 1 {
            return fail(format!("{} clockwise faces", outer.len()));
        }
        let (v, e, f) = (self.node_count(), self.edge_count(), faces.len());
        if f + v != e + 2 {
            return fail(format!("Euler: f={f} e={e} v={v}"));
        }
        if histogram.keys().any(|l| l % 2 == 1 || *l < 4) {
            return fail("odd or short face".into());
        }
        if histogram.iter().map(|(l, c)| l * c).sum::<usize>() != 2 * e {
            return fail("face length sum".into());
        }
        let expected_outer = 2 * (2 * self.m + self.v_pi - 6);
        if outer[0] != expected_outer {
            return fail(format!("outer face length {} expected {}", outer[0], expected_outer));
        }
        Ok(FaceCensus { histogram, bounded, outer_len: outer[0], v, e, f })
    }
}

/// Unordered pairs of tiles that share a complete side.
pub fn side_sharing_pairs(t: &Tiling) -> usize {
    let mut edges: HashMap<(crate::geom::LatticePoint, crate::geom::LatticePoint), usize> = HashMap::new();
    for tile in t.tiles() {
        let v = tile.vertices();
        for i in 0..3 {
            let (p, q) = (v[i].clone(), v[(i + 1) % 3].clone());
            let key = if p < q { (p, q) } else { (q, p) };
            *edges.entry(key).or_insert(0) += 1;
        }
    }
    edges.values().filter(|&&c| c == 2).count()
}

/// Checks the pair bound `pairs ≥ m + v_π − 3` together with the degree and
/// face identities behind it, including
/// `f4 = 6 + Σ_{i≥3} (i−3)·f_{2i} − m + 3·v6` over all faces.
pub fn check_pair_bound(t: &Tiling) -> Result<PairBoundReport, GammaError> {
    let g = build_gamma(t)?;
    let deg = g.degree_census()?;
    let faces = g.face_census()?;
    let pairs = side_sharing_pairs(t);
    let (m, v_pi) = (g.m, g.v_pi);
    let rhs: i64 = 6 + faces.histogram.iter().map(|(l, c)| (*l as i64 / 2 - 3) * *c as i64).filter(|x| *x > 0).sum::<i64>()
        - m as i64
        + 3 * deg.v6 as i64;
    if faces.f(4) as i64 != rhs {
        return Err(GammaError::LemmaViolation(format!("f4 = {} but identity gives {}", faces.f(4), rhs)));
    }
    if faces.bounded_f4() > pairs {
        return Err(GammaError::LemmaViolation(format!("bounded f4 {} exceeds pairs {}", faces.bounded_f4(), pairs)));
    }
    let margin = pairs as i64 - (m + v_pi) as i64 + 3;
    if margin < 0 {
        return Err(GammaError::LemmaViolation(format!("pairs {pairs} < m + v_pi - 3")));
    }
    Ok(PairBoundReport { m, v_pi, pairs, margin, bounded_f4: faces.bounded_f4(), f4_equals_pairs: faces.bounded_f4() == pairs })
}

pub fn census(t: &Tiling) -> Result<GammaCensus, GammaError> {
    let g = build_gamma(t)?;
    let deg = g.degree_census()?;
    let faces = g.face_census()?;
    let pairs = side_sharing_pairs(t);
    Ok(GammaCensus {
        v: faces.v,
        e: faces.e,
        f: faces.f,
        v2: deg.v2,
        v3: deg.v3,
        v6: deg.v6,
        f_2i: faces.histogram.clone(),
        bounded_f_2i: faces.bounded.clone(),
        outer_len: faces.outer_len,
        pairs,
        pair_margin: pairs as i64 - (g.m + g.v_pi) as i64 + 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Tile;

    fn rhombus() -> Tiling {
        Tiling::from_tiles(vec![Tile::up(0, 0, 1), Tile::down(0, 1, 1)]).unwrap()
    }

    #[test]
    fn rhombus_graph() {
        let t = rhombus();
        let g = build_gamma(&t).unwrap();
        assert_eq!((g.whites, g.node_count(), g.edge_count()), (2, 4, 4));
        let f = g.face_census().unwrap();
        assert_eq!((f.f, f.outer_len, f.bounded_f4()), (2, 4, 1));
        assert_eq!(g.degree_census().unwrap().v2, 4);
        assert_eq!(side_sharing_pairs(&t), 1);
    }

    #[test]
    fn quartered_triangle_graph() {
        let t = Tiling::from_tiles(vec![Tile::up(0, 0, 1), Tile::up(1, 0, 1), Tile::up(0, 1, 1), Tile::down(0, 1, 1)])
            .unwrap();
        let g = build_gamma(&t).unwrap();
        assert_eq!(g.node_count() - g.whites, 3);
        assert_eq!(g.degree_census().unwrap(), DegreeCensus { v2: 3, v3: 4, v6: 0 });
        assert_eq!(g.face_census().unwrap().outer_len, 6);
        let r = check_pair_bound(&t).unwrap();
        assert_eq!((r.pairs, r.margin), (3, 0));
    }

    #[test]
    fn single_tile_rejected() {
        let t = Tiling::from_tiles(vec![Tile::up(0, 0, 1)]).unwrap();
        assert!(matches!(build_gamma(&t), Err(GammaError::TooFewTiles)));
    }
}
