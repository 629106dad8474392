//! The conformance suite: sequence identities, every construction, the
//! recipe builds, the shipped hexagon tilings, the graph identities over all
//! of them, and a bounded enumeration scan.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::appendix::{self, AppendixRow};
use crate::bounds::{expected_bounds, Domain};
use crate::constructions::{self, RECIPES};
use crate::gamma::check_pair_bound;
use crate::geom::ShapeClass;
use crate::scalar::ExactScalar;
use crate::search::scan::scan_enumeration;
use crate::search::{enumerate_tilings, reconstruct, ReconstructOptions, ScanReport, SearchBudget, SearchError};
use crate::sequences::{check_padovan_bounds, check_q_bounds, p64, q64};
use crate::tiling::Tiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Ran out of budget before reaching a verdict.
    Incomplete,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl Check {
    fn from_failures(name: &str, detail: String, failures: Vec<String>, start: Instant) -> Check {
        let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
        Check { name: name.into(), status, detail, failures, seconds: start.elapsed().as_secs_f64() }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConformanceOptions {
    pub scale: i64,
    pub max_tiles: usize,
    pub jobs: usize,
    /// Upper index for the sequence scans.
    pub sequence_n: usize,
    /// Reconstruct every shipped hexagon from its multiset instead of only
    /// checking the shipped file.
    pub reconstruct: bool,
}

impl Default for ConformanceOptions {
    fn default() -> Self {
        ConformanceOptions { scale: 6, max_tiles: 8, jobs: 0, sequence_n: 60, reconstruct: true }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConformanceReport {
    pub options: ConformanceOptions,
    pub checks: Vec<Check>,
    pub corpus_size: usize,
    pub scan: Option<ScanReport>,
    pub passed: bool,
}

/// Exact values of the two sequences at a few reference indices.
pub fn check_sequence_values() -> Check {
    let start = Instant::now();
    let mut failures = Vec::new();
    let p = [1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12];
    for (i, want) in p.iter().enumerate() {
        if p64(i) != *want {
            failures.push(format!("p({i}) = {} expected {want}", p64(i)));
        }
    }
    let q = [(8, 8), (9, 11), (10, 9), (15, 48), (16, 67), (17, 87), (18, 115), (19, 154), (20, 202), (21, 269)];
    for (i, want) in q {
        if q64(i) != want {
            failures.push(format!("q({i}) = {} expected {want}", q64(i)));
        }
    }
    Check::from_failures("sequence-values", "p(0..10) and ten values of q".into(), failures, start)
}

pub fn check_sequences(max_n: usize) -> Check {
    let start = Instant::now();
    let a = check_padovan_bounds(max_n);
    let b = check_q_bounds(max_n);
    let detail = format!("up to n = {max_n}; exempt p: {:?}, exempt q: {:?}", a.exempt, b.exempt);
    let failures = a.violations.iter().chain(&b.violations).cloned().collect();
    Check::from_failures("sequence-scans", detail, failures, start)
}

/// Lower bound on `s` that the derived constructions guarantee, by shape and
/// tile count: first for the spiral `P_n` family, then for the t-perfect one.
pub fn construction_lower(shape: ShapeClass, t_perfect: bool, n: usize) -> i64 {
    let k = n as i64;
    use ShapeClass::*;
    match (shape, t_perfect) {
        (Triangle, false) | (Hexagon, false) => k - 5,
        (Trapezoid, false) | (Parallelogram, false) => k - 4,
        (Pentagon, false) => k - 3,
        (Triangle, true) | (Hexagon, true) => k - 6,
        (Trapezoid, true) | (Parallelogram, true) => k - 5,
        (Pentagon, true) => k - 4,
    }
}

fn side_multiset(t: &Tiling) -> Vec<ExactScalar> {
    let mut v = t.region().side_lengths();
    v.sort();
    v
}

fn want_sides(f: fn(usize) -> i64, n: usize) -> Vec<ExactScalar> {
    let mut v: Vec<ExactScalar> = (n - 4..=n).map(|k| ExactScalar::from(f(k))).collect();
    v.sort();
    v
}

/// Builds every construction for `4 ≤ n ≤ max_n` and checks its stated
/// properties. Returns the tilings built for the graph suite.
pub fn check_constructions(max_n: usize) -> (Check, Vec<Tiling>) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut corpus = Vec::new();
    let expect = |label: String, t: &Tiling, shape: ShapeClass, n: usize, tp: bool, min_s: i64, fs: &mut Vec<String>| {
        if !t.verify().valid {
            fs.push(format!("{label}: does not verify"));
        }
        if t.shape() != shape || t.len() != n {
            fs.push(format!("{label}: got {} with {} tiles", t.shape(), t.len()));
        }
        if tp && !t.is_t_perfect() {
            fs.push(format!("{label}: not t-perfect"));
        }
        let s = t.distinct_sizes() as i64;
        if s < min_s {
            fs.push(format!("{label}: s = {s} below {min_s}"));
        }
        if let Some(u) = expected_bounds(shape, tp, n).upper() {
            if s > u {
                fs.push(format!("{label}: s = {s} above {u}"));
            }
        }
    };
    for n in 4..=max_n {
        match constructions::spiral_pentagon(n) {
            Ok(t) => {
                expect(format!("P_{n}"), &t, ShapeClass::Pentagon, n, false, (n as i64 - 3).max(2), &mut failures);
                if t.distinct_sizes() != (n - 3).max(2) {
                    failures.push(format!("P_{n}: s = {}", t.distinct_sizes()));
                }
                if side_multiset(&t) != want_sides(p64, n) {
                    failures.push(format!("P_{n}: sides {:?}", t.region().side_lengths()));
                }
                corpus.push(t);
            }
            Err(e) => failures.push(format!("P_{n}: {e}")),
        }
        for (v, shape, extra) in
            [('a', ShapeClass::Triangle, 2), ('b', ShapeClass::Trapezoid, 1), ('c', ShapeClass::Parallelogram, 1), ('e', ShapeClass::Hexagon, 3)]
        {
            match constructions::derived_polygon(n, v) {
                Ok(t) => {
                    let lower = if n + extra >= 7 { construction_lower(shape, false, n + extra) } else { 2 };
                    expect(format!("P_{n}({v})"), &t, shape, n + extra, false, lower.max(1), &mut failures);
                    corpus.push(t);
                }
                Err(e) => failures.push(format!("P_{n}({v}): {e}")),
            }
        }
    }
    for n in 12..=max_n {
        match constructions::q_pentagon(n) {
            Ok(t) => {
                expect(format!("Q_{n}"), &t, ShapeClass::Pentagon, n, true, construction_lower(ShapeClass::Pentagon, true, n), &mut failures);
                if side_multiset(&t) != want_sides(q64, n) {
                    failures.push(format!("Q_{n}: sides {:?}", t.region().side_lengths()));
                }
                corpus.push(t);
            }
            Err(e) => failures.push(format!("Q_{n}: {e}")),
        }
        for (v, shape, extra) in
            [('a', ShapeClass::Triangle, 2), ('b', ShapeClass::Trapezoid, 1), ('c', ShapeClass::Parallelogram, 1), ('e', ShapeClass::Hexagon, 5)]
        {
            let excluded = (v == 'a' && n < 13) || (v == 'e' && n == 16);
            match (constructions::t_derived(n, v), excluded) {
                (Ok(t), false) => {
                    expect(format!("Q_{n}({v})"), &t, shape, n + extra, true, construction_lower(shape, true, n + extra), &mut failures);
                    corpus.push(t);
                }
                (Err(e), false) => failures.push(format!("Q_{n}({v}): {e}")),
                (Ok(_), true) => failures.push(format!("Q_{n}({v}): built although excluded")),
                (Err(_), true) => {}
            }
        }
    }
    use ShapeClass::*;
    let small = [(Triangle, 1), (Triangle, 4), (Trapezoid, 3), (Parallelogram, 2), (Parallelogram, 4), (Pentagon, 4), (Hexagon, 6)];
    for (shape, n) in small {
        match constructions::canonical_small(shape, n) {
            Ok(t) => {
                // a pentagon cannot be tiled by congruent triangles
                let s = if shape == Pentagon { 2 } else { 1 };
                if !t.verify().valid || t.shape() != shape || t.len() != n || t.distinct_sizes() != s {
                    failures.push(format!("small {shape} {n}"));
                }
                corpus.push(t);
            }
            Err(e) => failures.push(format!("small {shape} {n}: {e}")),
        }
    }
    let detail = format!("{} tilings for n up to {max_n}", corpus.len());
    (Check::from_failures("constructions", detail, failures, start), corpus)
}

pub fn check_recipes() -> (Check, Vec<Tiling>) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut corpus = Vec::new();
    for r in RECIPES.iter() {
        match constructions::table2_build(r.shape, r.n) {
            Ok(t) => {
                let ok = t.verify().valid && t.is_t_perfect() && t.shape() == r.shape && t.len() == r.n && t.distinct_sizes() == r.claimed_s();
                if !ok {
                    failures.push(format!("{} {}: n={} s={}", r.shape, r.n, t.len(), t.distinct_sizes()));
                }
                corpus.push(t);
            }
            Err(e) => failures.push(format!("{} {}: {e}", r.shape, r.n)),
        }
    }
    let detail = format!("{} of {} recipes built", corpus.len(), RECIPES.len());
    (Check::from_failures("recipes", detail, failures, start), corpus)
}

fn sorted_sizes(t: &Tiling) -> Vec<ExactScalar> {
    let mut v = t.sizes();
    v.sort();
    v
}

fn row_matches(row: &AppendixRow, t: &Tiling) -> Result<(), String> {
    let want: Vec<ExactScalar> = row.sizes.iter().map(|s| ExactScalar::from(*s)).collect();
    if !t.verify().valid {
        return Err("does not verify".into());
    }
    if t.shape() != ShapeClass::Hexagon {
        return Err(format!("shape {}", t.shape()));
    }
    if sorted_sizes(t) != want {
        return Err("size multiset differs".into());
    }
    let bound = if row.letter >= 't' { row.n - 5 } else { row.n - 4 };
    if t.distinct_sizes() != row.s || row.s != bound {
        return Err(format!("s = {} expected {}", t.distinct_sizes(), row.s));
    }
    if t.is_t_perfect() != row.t_perfect {
        return Err(format!("t-perfect = {}", t.is_t_perfect()));
    }
    Ok(())
}

/// Outcome of reconstructing one shipped row from its multiset alone.
#[derive(Debug, Clone, Serialize)]
pub struct RowResult {
    pub letter: char,
    pub status: Status,
    pub detail: String,
    pub seconds: f64,
}

pub fn reconstruct_row(row: &AppendixRow, node_limit: u64) -> (RowResult, Option<Tiling>) {
    let start = Instant::now();
    let opts = ReconstructOptions { t_perfect: row.t_perfect, node_limit, ..ReconstructOptions::default() };
    let (status, detail, tiling) = match reconstruct(ShapeClass::Hexagon, row.sizes, &opts) {
        Ok(found) => match found.into_iter().next() {
            Some(r) => match row_matches(row, &r.tiling) {
                Ok(()) => (Status::Pass, format!("region {:?}", r.region.sides()), Some(r.tiling)),
                Err(e) => (Status::Fail, e, None),
            },
            None => (Status::Fail, "no solution".into(), None),
        },
        Err(SearchError::BudgetExceeded(_)) => (Status::Incomplete, "node budget exhausted".into(), None),
        Err(e) => (Status::Fail, e.to_string(), None),
    };
    (RowResult { letter: row.letter, status, detail, seconds: start.elapsed().as_secs_f64() }, tiling)
}

/// Checks every shipped hexagon tiling against its row and, if asked,
/// reconstructs it from the multiset.
pub fn check_appendix(reconstruct_rows: bool) -> (Check, Vec<Tiling>) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut corpus = Vec::new();
    let mut incomplete = Vec::new();
    for row in appendix::ROWS.iter() {
        match appendix::tiling(row.letter) {
            Some(Ok(t)) => {
                if let Err(e) = row_matches(row, &t) {
                    failures.push(format!("({}) shipped: {e}", row.letter));
                }
                corpus.push(t);
            }
            Some(Err(e)) => failures.push(format!("({}) shipped: {e}", row.letter)),
            None => failures.push(format!("({}) not shipped", row.letter)),
        }
        if reconstruct_rows {
            let (r, t) = reconstruct_row(row, u64::MAX);
            match r.status {
                Status::Fail => failures.push(format!("({}) reconstructed: {}", row.letter, r.detail)),
                Status::Incomplete => incomplete.push(row.letter),
                Status::Pass => corpus.extend(t),
            }
        }
    }
    let mut c = Check::from_failures(
        "appendix",
        format!("{} rows, reconstruction {}", appendix::ROWS.len(), if reconstruct_rows { "on" } else { "off" }),
        failures,
        start,
    );
    if c.passed() && !incomplete.is_empty() {
        c.status = Status::Incomplete;
        c.detail = format!("{}; incomplete rows {incomplete:?}", c.detail);
    }
    (c, corpus)
}

/// The graph identities and the pair bound over every tiling with at least
/// two tiles.
pub fn check_graphs<'a, I: IntoIterator<Item = &'a Tiling>>(corpus: I) -> Check {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for t in corpus {
        if t.len() < 2 {
            continue;
        }
        checked += 1;
        if let Err(e) = check_pair_bound(t) {
            failures.push(format!("{} with {} tiles: {e}", t.shape(), t.len()));
        }
    }
    Check::from_failures("graphs", format!("{checked} tilings"), failures, start)
}

/// Tile counts each shape admits, as far as the bound tables know.
pub fn admitted_counts(shape: ShapeClass, t_perfect: bool, max_n: usize) -> BTreeSet<usize> {
    (1..=max_n).filter(|n| expected_bounds(shape, t_perfect, *n).domain != Domain::Out).collect()
}

/// Checks a scan: no violations, every found `(shape, n)` admitted, and each
/// expected witness `(shape, n, s)` present.
pub fn check_scan(report: &ScanReport, witnesses: &[(ShapeClass, usize, usize)]) -> Check {
    let start = Instant::now();
    let mut failures: Vec<String> = report.violations.iter().map(|v| format!("{}: {}", v.check, v.message)).collect();
    failures.extend(report.excluded_t_perfect.iter().map(|v| v.message.clone()));
    for shape in ShapeClass::ALL {
        let admitted = admitted_counts(shape, report.t_perfect_only, report.max_tiles);
        for n in report.counts_for(shape) {
            if !admitted.contains(&n) {
                failures.push(format!("{shape} with {n} tiles found"));
            }
        }
    }
    for (shape, n, s) in witnesses {
        match report.max_s(*shape, *n) {
            Some(m) if m >= *s => {}
            m => failures.push(format!("{shape} with {n} tiles: max s {m:?}, expected {s}")),
        }
    }
    if report.truncated {
        failures.push("scan truncated".into());
    }
    let detail = format!(
        "{} regions, {} tilings, {} nodes; {}",
        report.regions, report.tilings, report.nodes, report.note
    );
    Check::from_failures(if report.t_perfect_only { "scan-t-perfect" } else { "scan" }, detail, failures, start)
}

/// Witnesses the scan at scale 6 with up to 8 tiles must find.
pub const SCAN_WITNESSES: [(ShapeClass, usize, usize); 6] = [
    (ShapeClass::Triangle, 6, 2),
    (ShapeClass::Trapezoid, 5, 2),
    (ShapeClass::Parallelogram, 5, 2),
    (ShapeClass::Pentagon, 4, 2),
    (ShapeClass::Hexagon, 7, 2),
    (ShapeClass::Hexagon, 8, 3),
];

pub fn run_scan(budget: &SearchBudget) -> Result<(ScanReport, Vec<Tiling>), SearchError> {
    let e = match enumerate_tilings(None, budget) {
        Ok(e) => e,
        Err(SearchError::BudgetExceeded(partial)) => *partial,
        Err(e) => return Err(e),
    };
    let report = scan_enumeration(&e, budget);
    Ok((report, e.tilings.into_iter().map(|t| t.tiling).collect()))
}

pub fn run(opts: &ConformanceOptions) -> ConformanceReport {
    let mut checks = vec![check_sequence_values(), check_sequences(opts.sequence_n)];
    let mut corpus = Vec::new();
    for (c, ts) in [check_constructions(30), check_recipes(), check_appendix(opts.reconstruct)] {
        checks.push(c);
        corpus.extend(ts);
    }
    let budget = SearchBudget::new(opts.max_tiles, opts.scale).jobs(opts.jobs);
    let scan_start = Instant::now();
    let scan = match run_scan(&budget) {
        Ok((report, ts)) => {
            // the witnesses are known to lie within scale 6
            let witnesses: Vec<_> = if opts.scale >= 6 {
                SCAN_WITNESSES.iter().copied().filter(|(_, n, _)| *n <= opts.max_tiles).collect()
            } else {
                Vec::new()
            };
            let mut c = check_scan(&report, &witnesses);
            c.seconds = scan_start.elapsed().as_secs_f64();
            checks.push(c);
            corpus.extend(ts);
            Some(report)
        }
        Err(e) => {
            let start = Instant::now();
            checks.push(Check::from_failures("scan", String::new(), vec![e.to_string()], start));
            None
        }
    };
    checks.push(check_graphs(&corpus));
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    ConformanceReport { options: *opts, checks, corpus_size: corpus.len(), scan, passed }
}
