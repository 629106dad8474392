//! Naive subset oracle: lists every placeable tile of a region with its set
//! of unit cells, then counts the subsets that partition the region.

use std::collections::BTreeSet;

use tritile::lattice::TriBox;

type Pt = (i64, i64);
type Cell = [Pt; 3];

fn in_box(r: &TriBox, (a, b): Pt) -> bool {
    (r.a0..=r.a1).contains(&a) && (r.b0..=r.b1).contains(&b) && (r.c0..=r.c1).contains(&(a + b))
}

fn up(a: i64, b: i64, s: i64) -> Cell {
    [(a, b), (a + s, b), (a, b + s)]
}

fn down(a: i64, b: i64, s: i64) -> Cell {
    [(a, b), (a + s, b - s), (a + s, b)]
}

/// Closed-triangle membership by barycentric sign tests in lattice coordinates.
fn inside(t: &Cell, p: Pt) -> bool {
    let cross = |o: Pt, u: Pt, v: Pt| (u.0 - o.0) * (v.1 - o.1) - (u.1 - o.1) * (v.0 - o.0);
    let d = [cross(t[0], t[1], p), cross(t[1], t[2], p), cross(t[2], t[0], p)];
    d.iter().all(|x| *x >= 0) || d.iter().all(|x| *x <= 0)
}

pub struct Oracle {
    pub cells: Vec<Cell>,
    tiles: Vec<(BTreeSet<usize>, usize)>,
}

impl Oracle {
    pub fn new(r: &TriBox) -> Oracle {
        let (lo, hi) = (r.a0.min(r.b0) - 1, r.a1.max(r.b1) + 1);
        let mut cells = Vec::new();
        for a in lo..=hi {
            for b in lo..=hi {
                for c in [up(a, b, 1), down(a, b, 1)] {
                    if c.iter().all(|p| in_box(r, *p)) {
                        cells.push(c);
                    }
                }
            }
        }
        cells.sort();
        let span = hi - lo;
        let mut tiles = Vec::new();
        for a in lo..=hi {
            for b in lo..=hi {
                for s in 1..=span {
                    for t in [up(a, b, s), down(a, b, s)] {
                        if !t.iter().all(|p| in_box(r, *p)) {
                            continue;
                        }
                        let covered: BTreeSet<usize> =
                            (0..cells.len()).filter(|&i| cells[i].iter().all(|p| inside(&t, *p))).collect();
                        assert_eq!(covered.len() as i64, s * s);
                        let first = *covered.iter().next().unwrap();
                        tiles.push((covered, first));
                    }
                }
            }
        }
        tiles.sort_by_key(|t| t.1);
        Oracle { cells, tiles }
    }

    /// Counts subsets of the placeable tiles that partition the region.
    pub fn count(&self, max_tiles: usize) -> u64 {
        let mut used = vec![false; self.cells.len()];
        self.rec(0, &mut used, 0, max_tiles)
    }

    fn rec(&self, i: usize, used: &mut Vec<bool>, chosen: usize, max_tiles: usize) -> u64 {
        let first_free = used.iter().position(|u| !u);
        let Some(first_free) = first_free else { return 1 };
        if i == self.tiles.len() || chosen == max_tiles || self.tiles[i].1 > first_free {
            return 0;
        }
        let (cov, _) = &self.tiles[i];
        let mut total = self.rec(i + 1, used, chosen, max_tiles);
        if cov.iter().all(|c| !used[*c]) {
            for c in cov {
                used[*c] = true;
            }
            total += self.rec(i + 1, used, chosen + 1, max_tiles);
            for c in cov {
                used[*c] = false;
            }
        }
        total
    }
}
