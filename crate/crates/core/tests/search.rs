//! Enumeration checked against a naive subset oracle, and for determinism.

#[path = "common/oracle.rs"]
mod oracle;

use oracle::Oracle;
use tritile::search::{count_tilings, enumerate_tilings, regions_up_to, SearchBudget};

#[test]
fn oracle_agrees_on_small_regions() {
    let regions: Vec<_> = regions_up_to(16).into_iter().filter(|r| r.area() <= 16).collect();
    assert!(regions.len() >= 30);
    for r in regions {
        let o = Oracle::new(&r.tri_box());
        assert_eq!(o.cells.len() as i64, r.area());
        for max_tiles in [3, 6, 16] {
            assert_eq!(count_tilings(r, max_tiles), o.count(max_tiles), "{:?} with at most {max_tiles} tiles", r.sides());
        }
    }
}

#[test]
fn one_and_eight_workers_agree() {
    let budget = SearchBudget::new(7, 5);
    let one = enumerate_tilings(None, &budget.jobs(1)).unwrap();
    let eight = enumerate_tilings(None, &budget.jobs(8)).unwrap();
    let keys = |e: &tritile::search::Enumeration| e.tilings.iter().map(|t| (t.region, t.key.clone())).collect::<Vec<_>>();
    assert_eq!(keys(&one), keys(&eight));
    assert_eq!(one.nodes, eight.nodes);
}
