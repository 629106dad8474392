//! Finds tilings with a prescribed multiset of tile sizes.
//!
//! Candidate regions come from the area identity `l^2 - x^2 - y^2 - z^2 =
//! sum of squares` together with the fact that every region side is a sum
//! of tile sizes. Sides are built from at most `1 + max_pi` tiles each and
//! from at most `sides + max_pi` tiles in total, which bounds the number of
//! straight boundary vertices; this makes the region list finite but means
//! a region needing more is not tried.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use super::canon::{key_of_itiles, CanonicalKey};
use super::engine::{Engine, Flow, SizePool};
use super::enumerate::with_pool;
use super::region::RegionSpec;
use super::SearchError;
use crate::geom::ShapeClass;
use crate::lattice::ITile;
use crate::tiling::Tiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReconstructOptions {
    /// Extra boundary parts allowed in total over all sides.
    pub max_pi: usize,
    /// Require distinct `(size, orientation)` pairs.
    pub t_perfect: bool,
    /// Return every solution instead of the first.
    pub all: bool,
    pub jobs: usize,
    /// Search nodes allowed per region.
    pub node_limit: u64,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        ReconstructOptions { max_pi: 3, t_perfect: false, all: false, jobs: 0, node_limit: u64::MAX }
    }
}

#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub region: RegionSpec,
    pub key: CanonicalKey,
    pub tiling: Tiling,
}

/// Minimum number of parts for every sum of at most `k` sizes.
fn part_sums(sizes: &[i64], k: usize) -> BTreeMap<i64, usize> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for s in sizes {
        *counts.entry(*s).or_default() += 1;
    }
    let distinct: Vec<(i64, usize)> = counts.into_iter().collect();
    let mut out = BTreeMap::new();
    fn rec(d: &[(i64, usize)], i: usize, left: usize, sum: i64, parts: usize, out: &mut BTreeMap<i64, usize>) {
        if parts > 0 {
            let e = out.entry(sum).or_insert(parts);
            *e = (*e).min(parts);
        }
        if left == 0 || i == d.len() {
            return;
        }
        let (v, c) = d[i];
        for take in 0..=c.min(left) {
            rec(d, i + 1, left - take, sum + v * take as i64, parts + take, out);
        }
    }
    rec(&distinct, 0, k, 0, 0, &mut out);
    out
}

fn isqrt(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    let mut r = (v as f64).sqrt() as i64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    (r * r == v).then_some(r)
}

/// Regions of the given shape whose area matches and whose sides are all
/// short sums of tile sizes.
pub fn candidate_regions(shape: ShapeClass, sizes: &[i64], max_pi: usize) -> Vec<RegionSpec> {
    let area: i64 = sizes.iter().map(|s| s * s).sum();
    let sums = part_sums(sizes, 1 + max_pi);
    let budget = shape.vertex_count() + max_pi;
    let parts = |v: i64| if v == 0 { Some(0) } else { sums.get(&v).copied() };
    // (value, extra parts beyond one), sorted by extra parts
    let mut list: Vec<(i64, usize)> = std::iter::once((0, 0)).chain(sums.iter().map(|(&s, &p)| (s, p - 1))).collect();
    list.sort_by_key(|&(v, e)| (e, v));
    let mut out = BTreeSet::new();
    for &(x, ex) in &list {
        if ex > max_pi {
            break;
        }
        for &(y, ey) in &list {
            if ex + ey > max_pi {
                break;
            }
            for &(z, ez) in &list {
                if ex + ey + ez > max_pi {
                    break;
                }
                let Some(l) = isqrt(area + x * x + y * y + z * z) else { continue };
                let Some(r) = RegionSpec::new(l, x, y, z) else { continue };
                if r.shape() != shape {
                    continue;
                }
                let mut total = 0;
                let mut ok = true;
                for s in r.sides() {
                    match parts(s) {
                        Some(p) => total += p,
                        None => ok = false,
                    }
                }
                if ok && total <= budget {
                    out.insert(r.canonical());
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The distinct images of a region under the lattice symmetries.
fn orientations(r: &RegionSpec) -> Vec<RegionSpec> {
    let mut out = BTreeSet::new();
    for rev in [false, true] {
        for rot in 0..6 {
            let mut w = r.sides();
            if rev {
                w.reverse();
            }
            w.rotate_left(rot);
            if let Some(img) = RegionSpec::from_sides(w) {
                out.insert(img);
            }
        }
    }
    out.into_iter().collect()
}

/// Tilings of some region of the given shape using exactly the given sizes.
///
/// Without `all`, the search races every orientation of every candidate
/// region, with small and large tiles tried first, under node budgets that
/// grow by a factor of four per round. How hard a tiling is to find depends
/// strongly on the corner the scan starts from, so this finds a first
/// solution far sooner than any single fixed search. With `all`, each region
/// is searched exhaustively.
pub fn reconstruct(shape: ShapeClass, sizes: &[i64], opts: &ReconstructOptions) -> Result<Vec<Reconstruction>, SearchError> {
    if sizes.is_empty() || sizes.iter().any(|s| *s <= 0) {
        return Err(SearchError::InvalidSizes);
    }
    let regions = candidate_regions(shape, sizes, opts.max_pi);
    let pool = SizePool::Multiset { sizes: sizes.to_vec(), t_perfect: opts.t_perfect };
    if opts.all {
        return reconstruct_all(&regions, &pool, opts);
    }
    struct Lane {
        region: RegionSpec,
        image: RegionSpec,
        largest_first: bool,
    }
    let mut lanes: Vec<Lane> = regions
        .iter()
        .flat_map(|r| {
            orientations(r).into_iter().flat_map(move |image| {
                [true, false].into_iter().map(move |largest_first| Lane { region: *r, image, largest_first })
            })
        })
        .collect();
    let mut spent = 0u64;
    let mut budget = 4096u64;
    while !lanes.is_empty() {
        let mut refuted = BTreeSet::new();
        for lane in &lanes {
            if refuted.contains(&lane.region) {
                continue;
            }
            let limit = budget.min(opts.node_limit.saturating_sub(spent));
            if limit == 0 {
                return Err(SearchError::BudgetExceeded(Box::default()));
            }
            let mut engine = Engine::new(lane.image.tri_box(), &pool, limit).largest_first(lane.largest_first);
            let mut hit = None;
            let stats = engine.run(None, &mut |tiles: &[ITile]| {
                hit = Some(tiles.to_vec());
                Flow::Stop
            });
            spent += stats.nodes;
            if let Some(tiles) = hit {
                let key = key_of_itiles(&tiles);
                return Ok(vec![Reconstruction { region: lane.region, tiling: key.to_tiling(), key }]);
            }
            if !stats.truncated {
                refuted.insert(lane.region);
            }
        }
        lanes.retain(|l| !refuted.contains(&l.region));
        budget = budget.saturating_mul(4);
    }
    Err(SearchError::NoSolution)
}

/// Every tiling of one fixed region using exactly the given sizes.
pub fn tilings_in_region(region: RegionSpec, sizes: &[i64], opts: &ReconstructOptions) -> Result<Vec<Reconstruction>, SearchError> {
    if sizes.is_empty() || sizes.iter().any(|s| *s <= 0) {
        return Err(SearchError::InvalidSizes);
    }
    if region.area() != sizes.iter().map(|s| s * s).sum::<i64>() {
        return Err(SearchError::NoSolution);
    }
    let pool = SizePool::Multiset { sizes: sizes.to_vec(), t_perfect: opts.t_perfect };
    reconstruct_all(&[region], &pool, opts)
}

fn reconstruct_all(regions: &[RegionSpec], pool: &SizePool, opts: &ReconstructOptions) -> Result<Vec<Reconstruction>, SearchError> {
    let truncated = AtomicBool::new(false);
    let found: Mutex<BTreeMap<(RegionSpec, CanonicalKey), ()>> = Mutex::new(BTreeMap::new());
    with_pool(opts.jobs, || {
        regions.par_iter().for_each(|r| {
            let mut engine = Engine::new(r.tri_box(), pool, opts.node_limit);
            let stats = engine.run(None, &mut |tiles: &[ITile]| {
                found.lock().unwrap().insert((*r, key_of_itiles(tiles)), ());
                Flow::Continue
            });
            if stats.truncated {
                truncated.store(true, Ordering::Relaxed);
            }
        })
    });
    let out: Vec<Reconstruction> = found
        .into_inner()
        .unwrap()
        .into_keys()
        .map(|(region, key)| Reconstruction { region, tiling: key.to_tiling(), key })
        .collect();
    if truncated.load(Ordering::Relaxed) {
        return Err(SearchError::BudgetExceeded(Box::default()));
    }
    if out.is_empty() {
        return Err(SearchError::NoSolution);
    }
    Ok(out)
}
