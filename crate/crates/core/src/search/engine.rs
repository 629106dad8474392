//! Backtracking over placements of integer tiles in a region.
//!
//! The search always extends at the first uncovered unit cell in
//! (row, index) order. That cell's key vertex (bottom-left of an up cell,
//! bottom of a down cell) is a vertex of the region or of a placed tile, and
//! every earlier cell around it is already covered, so the only tile that can
//! cover it has that vertex as its anchor (up) or bottom vertex (down). The
//! search therefore branches on the tile size alone.

use std::collections::BTreeSet;

use crate::lattice::{ITile, TriBox};

/// Which tile sizes may still be used.
#[derive(Debug, Clone)]
pub enum SizePool {
    /// Any size, at most `max_tiles` tiles.
    Free { max_tiles: usize, t_perfect: bool },
    /// Exactly the given multiset.
    Multiset { sizes: Vec<i64>, t_perfect: bool },
}

#[derive(Debug, Clone)]
struct Pool {
    free: bool,
    max_tiles: usize,
    t_perfect: bool,
    /// Distinct sizes, ascending, with remaining counts (multiset mode).
    sizes: Vec<i64>,
    left: Vec<u32>,
    /// Orientation used flags per size index (t-perfect, multiset mode) or
    /// per size value (free mode).
    used: Vec<[bool; 2]>,
    placed: usize,
}

impl Pool {
    fn new(spec: &SizePool, max_size: i64) -> Pool {
        match spec {
            SizePool::Free { max_tiles, t_perfect } => Pool {
                free: true,
                max_tiles: *max_tiles,
                t_perfect: *t_perfect,
                sizes: (1..=max_size).collect(),
                left: vec![u32::MAX; max_size.max(0) as usize],
                used: vec![[false; 2]; max_size.max(0) as usize],
                placed: 0,
            },
            SizePool::Multiset { sizes, t_perfect } => {
                let mut distinct: Vec<i64> = sizes.clone();
                distinct.sort();
                distinct.dedup();
                let left = distinct.iter().map(|s| sizes.iter().filter(|x| *x == s).count() as u32).collect();
                Pool {
                    free: false,
                    max_tiles: sizes.len(),
                    t_perfect: *t_perfect,
                    used: vec![[false; 2]; distinct.len()],
                    sizes: distinct,
                    left,
                    placed: 0,
                }
            }
        }
    }

    fn available(&self, idx: usize, up: bool) -> bool {
        self.left[idx] > 0 && !(self.t_perfect && self.used[idx][up as usize])
    }

    fn take(&mut self, idx: usize, up: bool) {
        self.left[idx] = self.left[idx].wrapping_sub(if self.free { 0 } else { 1 });
        self.used[idx][up as usize] = true;
        self.placed += 1;
    }

    fn give(&mut self, idx: usize, up: bool) {
        self.left[idx] = self.left[idx].wrapping_add(if self.free { 0 } else { 1 });
        self.used[idx][up as usize] = false;
        self.placed -= 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flow {
    Continue,
    Stop,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub solutions: u64,
    pub truncated: bool,
}

/// A first-level choice, used to split the work between threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branch(pub ITile);

pub struct Engine {
    region: TriBox,
    region_area: i64,
    tiles: Vec<ITile>,
    boxes: Vec<TriBox>,
    covered: i64,
    points: BTreeSet<(i64, i64)>,
    pool: Pool,
    node_limit: u64,
    stats: SearchStats,
    /// Largest tile that fits anywhere in the region.
    max_fit: i64,
    subset_sum: bool,
    largest_first: bool,
}

impl Engine {
    pub fn new(region: TriBox, pool: &SizePool, node_limit: u64) -> Engine {
        let region = region.tighten();
        let max_fit = largest_tile(&region);
        let mut points = BTreeSet::new();
        let hull_pts = [
            (region.a0.max(region.c0 - region.b0), region.b0),
            (region.a1, region.b0),
            (region.a1, region.c1 - region.a1),
            (region.c1 - region.b1, region.b1),
            (region.a0, region.b1),
            (region.a0, region.c0 - region.a0),
        ];
        for (a, b) in hull_pts {
            points.insert((b, a));
        }
        let pool = Pool::new(pool, max_fit);
        let subset_sum = !pool.free;
        Engine {
            region,
            region_area: region.area(),
            tiles: Vec::new(),
            boxes: Vec::new(),
            covered: 0,
            points,
            pool,
            node_limit,
            stats: SearchStats::default(),
            max_fit,
            subset_sum,
            largest_first: false,
        }
    }

    /// Tries larger tiles before smaller ones.
    pub fn largest_first(mut self, yes: bool) -> Engine {
        self.largest_first = yes;
        self
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    fn cell_inside(&self, v: [(i64, i64); 3]) -> bool {
        v.iter().all(|&p| self.region.contains_point(p))
    }

    fn cell_covered(&self, v: [(i64, i64); 3]) -> bool {
        self.tiles.iter().any(|t| v.iter().all(|&p| t.contains_point(p)))
    }

    /// First uncovered cell at or after the point `from` in (b, a) order:
    /// returns the key vertex and whether the cell is an up cell.
    fn first_open(&self, from: (i64, i64)) -> Option<((i64, i64), bool)> {
        for &(b, a) in self.points.range(from..) {
            let down = [(a - 1, b + 1), (a, b + 1), (a, b)];
            if self.cell_inside(down) && !self.cell_covered(down) {
                return Some(((b, a), false));
            }
            let up = [(a, b), (a + 1, b), (a, b + 1)];
            if self.cell_inside(up) && !self.cell_covered(up) {
                return Some(((b, a), true));
            }
        }
        None
    }

    fn tile_at(q: (i64, i64), up: bool, s: i64) -> ITile {
        let (b, a) = q;
        if up {
            ITile::up(a, b, s)
        } else {
            ITile::down(a - s, b + s, s)
        }
    }

    fn fits(&self, t: &ITile) -> bool {
        let bx = t.tri_box();
        self.region.contains_box(&bx) && self.boxes.iter().all(|o| !o.interiors_meet(&bx))
    }

    /// Number of consecutive open up cells on row `b` starting at column `a`.
    fn floor_run(&self, a: i64, b: i64) -> i64 {
        let mut end = self.region.a1.min(self.region.c1 - b);
        for bx in &self.boxes {
            if let Some((lo, hi)) = bx.row_cells(b) {
                let first_up = (lo + 1).div_euclid(2);
                let last_up = hi.div_euclid(2);
                if first_up <= last_up && last_up >= a {
                    end = end.min(first_up.max(a));
                }
            }
        }
        end - a
    }

    fn run_is_sum(&self, run: i64) -> bool {
        let words = (run as usize) / 64 + 1;
        let mut reach = vec![0u64; words];
        reach[0] = 1;
        for (i, &s) in self.pool.sizes.iter().enumerate() {
            if s > run {
                break;
            }
            let copies = if self.pool.t_perfect {
                u32::from(self.pool.available(i, true))
            } else {
                self.pool.left[i]
            };
            for _ in 0..copies.min((run / s) as u32) {
                shift_or(&mut reach, s as usize);
            }
        }
        reach[(run as usize) / 64] >> (run as usize % 64) & 1 == 1
    }

    fn place(&mut self, t: ITile) -> Vec<(i64, i64)> {
        let mut added = Vec::new();
        for (a, b) in t.vertices() {
            if self.points.insert((b, a)) {
                added.push((b, a));
            }
        }
        self.covered += t.area();
        self.boxes.push(t.tri_box());
        self.tiles.push(t);
        added
    }

    fn unplace(&mut self, added: Vec<(i64, i64)>) {
        let t = self.tiles.pop().unwrap();
        self.boxes.pop();
        self.covered -= t.area();
        for p in added {
            self.points.remove(&p);
        }
    }

    /// Candidate first tiles, for splitting the search.
    pub fn first_branches(&self) -> Vec<Branch> {
        let Some((q, up)) = self.first_open((i64::MIN, i64::MIN)) else { return Vec::new() };
        (0..self.pool.sizes.len())
            .filter(|&i| self.pool.available(i, up))
            .map(|i| Self::tile_at(q, up, self.pool.sizes[i]))
            .take_while(|t| self.fits(t))
            .map(Branch)
            .collect()
    }

    /// Runs the search, restricted to one first-level branch if given. The
    /// callback receives each complete tiling.
    pub fn run<F: FnMut(&[ITile]) -> Flow>(&mut self, branch: Option<Branch>, on_solution: &mut F) -> SearchStats {
        match branch {
            None => {
                self.dfs((i64::MIN, i64::MIN), on_solution);
            }
            Some(Branch(t)) => {
                let idx = self.pool.sizes.binary_search(&t.s).expect("branch size in pool");
                if self.fits(&t) && self.pool.available(idx, t.up) {
                    self.pool.take(idx, t.up);
                    let added = self.place(t);
                    let start = (t.vertices()[if t.up { 0 } else { 1 }].1, i64::MIN);
                    self.dfs(start, on_solution);
                    self.unplace(added);
                    self.pool.give(idx, t.up);
                }
            }
        }
        self.stats
    }

    fn dfs<F: FnMut(&[ITile]) -> Flow>(&mut self, from: (i64, i64), on_solution: &mut F) -> Flow {
        self.stats.nodes += 1;
        if self.stats.nodes > self.node_limit {
            self.stats.truncated = true;
            return Flow::Stop;
        }
        let remaining = self.region_area - self.covered;
        if remaining == 0 {
            self.stats.solutions += 1;
            return on_solution(&self.tiles);
        }
        let slots = self.pool.max_tiles - self.pool.placed;
        if slots == 0 || remaining > slots as i64 * self.max_fit * self.max_fit {
            return Flow::Continue;
        }
        let Some((q, up)) = self.first_open(from) else {
            return Flow::Continue;
        };
        if up && self.subset_sum {
            let run = self.floor_run(q.1, q.0);
            if !self.run_is_sum(run) {
                return Flow::Continue;
            }
        }
        let mut fitting = 0;
        while fitting < self.pool.sizes.len() {
            let s = self.pool.sizes[fitting];
            if !self.fits(&Self::tile_at(q, up, s)) || (!self.pool.free && remaining < s * s) {
                break;
            }
            fitting += 1;
        }
        for k in 0..fitting {
            let i = if self.largest_first { fitting - 1 - k } else { k };
            if !self.pool.available(i, up) {
                continue;
            }
            let t = Self::tile_at(q, up, self.pool.sizes[i]);
            self.pool.take(i, up);
            let added = self.place(t);
            let flow = self.dfs(q, on_solution);
            self.unplace(added);
            self.pool.give(i, up);
            if flow == Flow::Stop {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }
}

fn shift_or(bits: &mut [u64], s: usize) {
    let (w, r) = (s / 64, s % 64);
    for i in (0..bits.len()).rev() {
        let mut v = 0;
        if i >= w {
            v = bits[i - w] << r;
            if r > 0 && i > w {
                v |= bits[i - w - 1] >> (64 - r);
            }
        }
        bits[i] |= v;
    }
}

/// Side of the largest lattice triangle inside the region.
pub fn largest_tile(r: &TriBox) -> i64 {
    let r = r.tighten();
    // a point reflection swaps up and down triangles
    let flipped = TriBox { a0: -r.a1, a1: -r.a0, b0: -r.b1, b1: -r.b0, c0: -r.c1, c1: -r.c0 };
    largest_up(&r).max(largest_up(&flipped))
}

fn largest_up(r: &TriBox) -> i64 {
    let mut best = 0;
    for b in r.b0..r.b1 {
        for a in r.a0.max(r.c0 - b)..r.a1 {
            best = best.max((r.c1 - a - b).min(r.a1 - a).min(r.b1 - b));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::region::RegionSpec;

    fn count(r: RegionSpec, pool: SizePool) -> u64 {
        let mut e = Engine::new(r.tri_box(), &pool, u64::MAX);
        e.run(None, &mut |_| Flow::Continue).solutions
    }

    #[test]
    fn tiny_counts() {
        let free = |n| SizePool::Free { max_tiles: n, t_perfect: false };
        // unit rhombus: exactly one tiling
        assert_eq!(count(RegionSpec::new(2, 1, 1, 0).unwrap(), free(2)), 1);
        // side-2 triangle: whole tile, or four unit tiles
        assert_eq!(count(RegionSpec::new(2, 0, 0, 0).unwrap(), free(4)), 2);
        assert_eq!(count(RegionSpec::new(2, 0, 0, 0).unwrap(), free(3)), 1);
        // unit hexagon: six unit tiles
        assert_eq!(count(RegionSpec::new(3, 1, 1, 1).unwrap(), free(6)), 1);
    }

    #[test]
    fn multiset_mode() {
        let r = RegionSpec::new(3, 0, 0, 0).unwrap();
        let pool = SizePool::Multiset { sizes: vec![2, 1, 1, 1, 1, 1], t_perfect: false };
        // the size-2 tile sits in one of three corners
        assert_eq!(count(r, pool), 3);
    }

    #[test]
    fn largest_inscribed() {
        assert_eq!(largest_tile(&RegionSpec::new(4, 0, 0, 0).unwrap().tri_box()), 4);
        assert_eq!(largest_tile(&RegionSpec::new(3, 1, 1, 1).unwrap().tri_box()), 1);
        assert_eq!(largest_tile(&RegionSpec::new(6, 2, 2, 2).unwrap().tri_box()), 3);
        assert_eq!(largest_tile(&RegionSpec::new(2, 1, 1, 1).unwrap().tri_box()), 1);
        assert_eq!(largest_tile(&RegionSpec::new(4, 2, 2, 0).unwrap().tri_box()), 2);
    }
}
