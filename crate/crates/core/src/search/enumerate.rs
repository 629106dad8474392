//! Bounded exhaustive enumeration over all regions up to a given scale.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::canon::{key_of_itiles, CanonicalKey};
use super::engine::{Branch, Engine, Flow, SizePool};
use super::region::{regions_up_to, RegionSpec};
use super::SearchError;
use crate::geom::ShapeClass;
use crate::lattice::{gcd, ITile};
use crate::tiling::Tiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_tiles: usize,
    /// Largest region side after normalising the tile sizes to gcd 1.
    pub scale: i64,
    pub t_perfect_only: bool,
    pub jobs: usize,
    /// Search nodes allowed per first-level branch.
    pub node_limit: u64,
}

impl SearchBudget {
    pub fn new(max_tiles: usize, scale: i64) -> SearchBudget {
        SearchBudget { max_tiles, scale, t_perfect_only: false, jobs: 0, node_limit: u64::MAX }
    }

    pub fn t_perfect(mut self, yes: bool) -> SearchBudget {
        self.t_perfect_only = yes;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> SearchBudget {
        self.jobs = jobs;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.max_tiles < 1 || self.scale < 1 {
            return Err(SearchError::InvalidBudget);
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct EnumeratedTiling {
    pub key: CanonicalKey,
    pub region: RegionSpec,
    pub tiling: Tiling,
}

#[derive(Debug, Clone, Default)]
pub struct Enumeration {
    /// Sorted by `(region, key)`.
    pub tilings: Vec<EnumeratedTiling>,
    pub regions: usize,
    pub nodes: u64,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SummaryRow {
    pub shape: ShapeClass,
    pub n: usize,
    pub s: usize,
    pub t_perfect: bool,
    pub count: usize,
}

impl Enumeration {
    /// Counts per `(shape, n, s, t_perfect)`.
    pub fn summary(&self) -> Vec<SummaryRow> {
        let mut m: BTreeMap<(ShapeClass, usize, usize, bool), usize> = BTreeMap::new();
        for e in &self.tilings {
            let t = &e.tiling;
            *m.entry((e.region.shape(), t.len(), t.distinct_sizes(), t.is_t_perfect())).or_default() += 1;
        }
        m.into_iter().map(|((shape, n, s, t_perfect), count)| SummaryRow { shape, n, s, t_perfect, count }).collect()
    }
}

pub(crate) fn with_pool<T: Send, F: FnOnce() -> T + Send>(jobs: usize, f: F) -> T {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

struct Job {
    region: RegionSpec,
    pool: SizePool,
    branch: Branch,
}

struct JobResult {
    found: Vec<(CanonicalKey, Vec<ITile>)>,
    nodes: u64,
    truncated: bool,
}

fn run_job(job: &Job, node_limit: u64, keep: &(dyn Fn(&[ITile]) -> bool + Sync)) -> JobResult {
    let mut engine = Engine::new(job.region.tri_box(), &job.pool, node_limit);
    let mut found = Vec::new();
    let stats = engine.run(Some(job.branch), &mut |tiles| {
        if keep(tiles) {
            found.push((key_of_itiles(tiles), tiles.to_vec()));
        }
        Flow::Continue
    });
    JobResult { found, nodes: stats.nodes, truncated: stats.truncated }
}

fn jobs_for(regions: &[RegionSpec], pool: &SizePool) -> Vec<Job> {
    regions
        .iter()
        .flat_map(|r| {
            let engine = Engine::new(r.tri_box(), pool, u64::MAX);
            engine.first_branches().into_iter().map(move |branch| Job { region: *r, pool: pool.clone(), branch })
        })
        .collect()
}

/// Every tiling with at most `budget.max_tiles` tiles and tile sizes of gcd 1
/// of every region with sides at most `budget.scale`, optionally restricted
/// to one shape. Each tiling appears once up to similarity.
pub fn enumerate_tilings(shape: Option<ShapeClass>, budget: &SearchBudget) -> Result<Enumeration, SearchError> {
    budget.validate()?;
    let regions: Vec<RegionSpec> =
        regions_up_to(budget.scale).into_iter().filter(|r| shape.is_none_or(|s| r.shape() == s)).collect();
    let pool = SizePool::Free { max_tiles: budget.max_tiles, t_perfect: budget.t_perfect_only };
    let jobs = jobs_for(&regions, &pool);
    let keep = |tiles: &[ITile]| tiles.iter().fold(0, |g, t| gcd(g, t.s)) == 1;
    let results: Vec<JobResult> =
        with_pool(budget.jobs, || jobs.par_iter().map(|j| run_job(j, budget.node_limit, &keep)).collect());
    let mut merged: BTreeMap<(RegionSpec, CanonicalKey), ()> = BTreeMap::new();
    let mut out = Enumeration { regions: regions.len(), ..Default::default() };
    for (job, res) in jobs.iter().zip(results) {
        out.nodes += res.nodes;
        out.truncated |= res.truncated;
        for (key, _) in res.found {
            merged.insert((job.region, key), ());
        }
    }
    out.tilings = merged
        .into_keys()
        .map(|(region, key)| {
            let tiling = key.to_tiling();
            EnumeratedTiling { key, region, tiling }
        })
        .collect();
    if out.truncated {
        return Err(SearchError::BudgetExceeded(Box::new(out)));
    }
    Ok(out)
}

/// Number of tilings of one region with at most `max_tiles` tiles, counting
/// each placement separately.
pub fn count_tilings(region: RegionSpec, max_tiles: usize) -> u64 {
    let pool = SizePool::Free { max_tiles, t_perfect: false };
    let mut engine = Engine::new(region.tri_box(), &pool, u64::MAX);
    engine.run(None, &mut |_| Flow::Continue).solutions
}

/// Every placement-distinct tiling of one region with at most `max_tiles` tiles.
pub fn tilings_of_region(region: RegionSpec, max_tiles: usize) -> Vec<Vec<ITile>> {
    let pool = SizePool::Free { max_tiles, t_perfect: false };
    let mut engine = Engine::new(region.tri_box(), &pool, u64::MAX);
    let mut out = Vec::new();
    engine.run(None, &mut |tiles| {
        let mut v = tiles.to_vec();
        v.sort();
        out.push(v);
        Flow::Continue
    });
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_sweep_counts() {
        let e = enumerate_tilings(Some(ShapeClass::Triangle), &SearchBudget::new(5, 4)).unwrap();
        let ns: std::collections::BTreeSet<usize> = e.tilings.iter().map(|t| t.tiling.len()).collect();
        assert_eq!(ns.into_iter().collect::<Vec<_>>(), vec![1, 4]);
        for t in &e.tilings {
            assert!(t.tiling.verify().valid);
        }
    }

    #[test]
    fn rhombus_single() {
        let e = enumerate_tilings(Some(ShapeClass::Parallelogram), &SearchBudget::new(2, 1)).unwrap();
        assert_eq!(e.tilings.len(), 1);
        assert_eq!(e.tilings[0].tiling.len(), 2);
    }
}
