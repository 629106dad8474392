//! Checks every enumerated tiling against the known bounds and lemmas.

use std::collections::BTreeMap;

use serde::Serialize;

use super::enumerate::{enumerate_tilings, Enumeration, SearchBudget};
use super::SearchError;
use crate::bounds::{expected_bounds, s_upper, Domain};
use crate::format;
use crate::gamma::check_pair_bound;
use crate::geom::ShapeClass;
use crate::tiling::Tiling;

#[derive(Debug, Clone, Serialize)]
pub struct ConformanceViolation {
    pub check: String,
    pub message: String,
    pub tiling: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanCell {
    pub shape: ShapeClass,
    pub n: usize,
    pub t_perfect: bool,
    pub count: usize,
    pub max_s: usize,
    /// Known upper bound for this `(shape, n)`, if any.
    pub bound: Option<i64>,
    /// Whether `max_s` reaches the smallest value the bound tables allow.
    pub attains_lower: bool,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub scale: i64,
    pub max_tiles: usize,
    pub t_perfect_only: bool,
    pub regions: usize,
    pub tilings: usize,
    pub nodes: u64,
    pub truncated: bool,
    pub cells: Vec<ScanCell>,
    /// t-perfect tilings found where the tables exclude them, if any.
    pub excluded_t_perfect: Vec<ConformanceViolation>,
    pub violations: Vec<ConformanceViolation>,
    pub note: String,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.excluded_t_perfect.is_empty()
    }

    pub fn cell(&self, shape: ShapeClass, n: usize, t_perfect: bool) -> Option<&ScanCell> {
        self.cells.iter().find(|c| c.shape == shape && c.n == n && c.t_perfect == t_perfect)
    }

    /// Tile counts seen for a shape, over all tilings.
    pub fn counts_for(&self, shape: ShapeClass) -> Vec<usize> {
        let mut v: Vec<usize> = self.cells.iter().filter(|c| c.shape == shape).map(|c| c.n).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Largest `s` over all tilings of a shape with `n` tiles.
    pub fn max_s(&self, shape: ShapeClass, n: usize) -> Option<usize> {
        self.cells.iter().filter(|c| c.shape == shape && c.n == n).map(|c| c.max_s).max()
    }
}

fn violation(check: &str, message: String, t: &Tiling) -> ConformanceViolation {
    ConformanceViolation { check: check.into(), message, tiling: format::serialize(t) }
}

/// Runs every per-tiling check over one tiling.
pub fn check_tiling(t: &Tiling) -> Vec<ConformanceViolation> {
    let mut out = Vec::new();
    let (shape, n, s) = (t.shape(), t.len(), t.distinct_sizes());
    if let Some(v) = t.verify().violation {
        out.push(violation("verify", format!("{v:?}"), t));
        return out;
    }
    match expected_bounds(shape, false, n).domain {
        Domain::Out => out.push(violation("domain", format!("{shape} with {n} tiles is excluded"), t)),
        _ => {
            if let Some(u) = s_upper(shape, n) {
                if s as i64 > u {
                    out.push(violation("upper-bound", format!("s = {s} exceeds {u}"), t));
                }
            }
        }
    }
    if n >= 2 {
        if let Err(e) = check_pair_bound(t) {
            out.push(violation("pair-bound", e.to_string(), t));
        }
    }
    if let Err(e) = t.check_trapezoid_lemma() {
        out.push(violation("trapezoid", e.to_string(), t));
    }
    if t.is_t_perfect() {
        let mut per_size: BTreeMap<_, usize> = BTreeMap::new();
        for tile in t.tiles() {
            *per_size.entry(&tile.size).or_default() += 1;
        }
        if per_size.values().any(|c| *c > 2) {
            out.push(violation("t-perfect", "a size occurs more than twice".into(), t));
        }
    }
    out
}

pub fn scan_enumeration(e: &Enumeration, budget: &SearchBudget) -> ScanReport {
    let mut cells: BTreeMap<(ShapeClass, usize, bool), ScanCell> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut excluded = Vec::new();
    for et in &e.tilings {
        let t = &et.tiling;
        let (shape, n, s, tp) = (t.shape(), t.len(), t.distinct_sizes(), t.is_t_perfect());
        violations.extend(check_tiling(t));
        if tp && expected_bounds(shape, true, n).domain == Domain::Out {
            excluded.push(violation("t-perfect-domain", format!("t-perfect {shape} with {n} tiles"), t));
        }
        let cell = cells.entry((shape, n, tp)).or_insert_with(|| ScanCell {
            shape,
            n,
            t_perfect: tp,
            count: 0,
            max_s: 0,
            bound: None,
            attains_lower: false,
            witness: String::new(),
        });
        cell.count += 1;
        if s > cell.max_s {
            cell.max_s = s;
            cell.witness = format::serialize(t);
        }
    }
    for cell in cells.values_mut() {
        let entry = expected_bounds(cell.shape, cell.t_perfect, cell.n);
        cell.bound = entry.upper();
        cell.attains_lower = entry.s.as_ref().and_then(|v| v.lower()).is_some_and(|lo| cell.max_s as i64 >= lo);
    }
    ScanReport {
        scale: budget.scale,
        max_tiles: budget.max_tiles,
        t_perfect_only: budget.t_perfect_only,
        regions: e.regions,
        tilings: e.tilings.len(),
        nodes: e.nodes,
        truncated: e.truncated,
        cells: cells.into_values().collect(),
        excluded_t_perfect: excluded,
        violations,
        note: format!(
            "bounded search: all regions with sides at most {} (after normalising sizes to gcd 1) and at most {} tiles; absence of a tiling holds within scale B = {} only",
            budget.scale, budget.max_tiles, budget.scale
        ),
    }
}

/// Enumerates within the budget and checks every tiling found.
pub fn theorem_scan(budget: &SearchBudget) -> Result<ScanReport, SearchError> {
    let e = match enumerate_tilings(None, budget) {
        Ok(e) => e,
        Err(SearchError::BudgetExceeded(partial)) => *partial,
        Err(e) => return Err(e),
    };
    Ok(scan_enumeration(&e, budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_triangle_scan() {
        let r = theorem_scan(&SearchBudget::new(6, 3)).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.max_s(ShapeClass::Triangle, 6), Some(2));
        assert_eq!(r.counts_for(ShapeClass::Triangle), vec![1, 4, 6]);
    }
}
