use tritile::appendix;
use tritile::bounds::{expected_bounds, Domain, SValue};
use tritile::constructions::*;
use tritile::gamma::{build_gamma, census, check_pair_bound, side_sharing_pairs};
use tritile::search::{canonical_key, enumerate_tilings, reconstruct, theorem_scan, ReconstructOptions, SearchBudget, SearchError};
use tritile::sequences::{p64, q64};
use tritile::{ExactScalar, LatticePoint, ShapeClass, Tile, Tiling};

fn quartered() -> Tiling {
    Tiling::from_tiles(vec![Tile::up(0, 0, 1), Tile::up(1, 0, 1), Tile::up(0, 1, 1), Tile::down(0, 1, 1)]).unwrap()
}

fn hexagon6() -> Tiling {
    canonical_small(ShapeClass::Hexagon, 6).unwrap()
}

fn sc(v: i64) -> ExactScalar {
    ExactScalar::from(v)
}

fn rotations_of(v: &[ExactScalar], want: &[i64]) -> bool {
    let w: Vec<ExactScalar> = want.iter().map(|x| sc(*x)).collect();
    (0..v.len()).any(|r| {
        let mut c = v.to_vec();
        c.rotate_left(r);
        c == w || c.iter().rev().cloned().collect::<Vec<_>>() == w
    })
}

#[test]
fn shipped_rows() {
    let a = appendix::tiling('a').unwrap().unwrap();
    assert!(a.verify().valid && !a.is_t_perfect());
    let c = appendix::tiling('c').unwrap().unwrap();
    let s = c.stats();
    assert_eq!((s.n, s.s, s.t_perfect, s.shape), (11, 7, true, ShapeClass::Hexagon));
    assert!(appendix::tiling('j').unwrap().unwrap().is_t_perfect());
    let l = check_pair_bound(&c).unwrap();
    assert!(l.pairs + 3 >= 6 + l.v_pi);
}

#[test]
fn vertex_classes_and_exposed_tiles() {
    assert_eq!(quartered().v_pi(), 3);
    assert_eq!(hexagon6().v_pi(), 0);
    // the side of length 3 is a size-2 tile side followed by a unit side
    assert_eq!(spiral_pentagon(5).unwrap().v_pi(), 1);
    assert_eq!(spiral_pentagon(4).unwrap().v_pi(), 0);
    assert_eq!(canonical_small(ShapeClass::Parallelogram, 2).unwrap().exposed_tiles().len(), 2);
    assert!(hexagon6().exposed_tiles().is_empty());
    for n in 4..=12 {
        assert_eq!(spiral_pentagon(n).unwrap().exposed_tiles().len(), 1);
    }
}

#[test]
fn cutting_exposed_tiles() {
    let p5 = spiral_pentagon(5).unwrap();
    let k = p5.exposed_tiles()[0];
    let cut = p5.cut_exposed(k).unwrap();
    assert!(cut.verify().valid);
    assert_eq!(cut.len(), 4);
    assert_eq!(canonical_key(&cut).unwrap(), canonical_key(&spiral_pentagon(4).unwrap()).unwrap());
    let q = quartered();
    let corner = q.exposed_tiles()[0];
    let t = q.cut_exposed(corner).unwrap();
    assert_eq!((t.shape(), t.len(), t.distinct_sizes()), (ShapeClass::Trapezoid, 3, 1));
    assert_eq!(t.check_trapezoid_lemma(), Ok(true));
    let rh = canonical_small(ShapeClass::Parallelogram, 2).unwrap();
    assert_eq!(rh.cut_exposed(0).unwrap().len(), 1);
}

#[test]
fn trapezoid_lemma_not_applicable() {
    let t = derived_polygon(4, 'b').unwrap();
    assert_eq!((t.shape(), t.len()), (ShapeClass::Trapezoid, 5));
    assert_eq!(t.check_trapezoid_lemma(), Ok(false));
}

#[test]
fn attaching() {
    let unit = Tiling::from_tiles(vec![Tile::up(0, 0, 1)]).unwrap();
    for side in 0..3 {
        let r = unit.attach_triangle(&sc(1), Some(side)).unwrap();
        assert_eq!((r.shape(), r.len()), (ShapeClass::Parallelogram, 2));
    }
    let b = derived_polygon(4, 'b').unwrap();
    assert_eq!(b.distinct_sizes(), 2);
    let c = derived_polygon(5, 'c').unwrap();
    assert_eq!((c.shape(), c.len(), c.distinct_sizes()), (ShapeClass::Parallelogram, 6, 2));
    let e = derived_polygon(6, 'e').unwrap();
    assert_eq!((e.shape(), e.len()), (ShapeClass::Hexagon, 9));
    assert!(e.sizes().contains(&ExactScalar::new(3, 2)));
    let e7 = derived_polygon(7, 'e').unwrap();
    assert_eq!((e7.shape(), e7.len()), (ShapeClass::Hexagon, 10));
    assert!(e7.sizes().contains(&ExactScalar::new(5, 2)));
    assert!(e7.distinct_sizes() >= 5);
}

#[test]
fn spiral_facts() {
    let p4 = spiral_pentagon(4).unwrap();
    let mut sizes = p4.sizes();
    sizes.sort();
    assert_eq!(sizes, vec![sc(1), sc(1), sc(1), sc(2)]);
    assert!(rotations_of(&p4.region().side_lengths(), &[2, 1, 1, 1, 2]));
    let p8 = spiral_pentagon(8).unwrap();
    assert!(rotations_of(&p8.region().side_lengths(), &[7, 5, 4, 3, 2]));
    assert_eq!((p8.len(), p8.distinct_sizes()), (8, 5));
    assert_eq!(spiral_pentagon(30).unwrap().distinct_sizes(), 27);
}

#[test]
fn t_spiral_facts() {
    let q = q_pentagon(12).unwrap();
    let mut sizes = q.sizes();
    sizes.sort();
    let want: Vec<ExactScalar> = [2, 2, 3, 5, 5, 7, 7, 8, 8, 9, 11, 12].iter().map(|x| sc(*x)).collect();
    assert_eq!(sizes, want);
    assert!(rotations_of(&q.region().side_lengths(), &[20, 19, 9, 11, 8]));
    assert_eq!(q.distinct_sizes(), 8);
    assert!(q_base_audit(&q));
    let q13 = q_pentagon(13).unwrap();
    assert_eq!(q13.distinct_sizes(), 9);
    assert!(q13.sizes().contains(&sc(20)));
    assert_eq!(q64(11), 19);
    assert_eq!((p64(3), p64(4), p64(0)), (2, 2, 1));
}

#[test]
fn t_derived_facts() {
    let a = t_derived(13, 'a').unwrap();
    assert_eq!((a.shape(), a.len(), a.is_t_perfect()), (ShapeClass::Triangle, 15, true));
    // the guaranteed bound is 15 - 6; this instance happens to reach one more
    assert_eq!(a.distinct_sizes(), 10);
    let e = t_derived(12, 'e').unwrap();
    assert_eq!((e.shape(), e.len(), e.is_t_perfect(), e.distinct_sizes()), (ShapeClass::Hexagon, 17, true, 11));
    assert_eq!(t_derived(16, 'e'), Err(ConstructionError::InvalidN(16)));
}

#[test]
fn small_witnesses() {
    let r = canonical_small(ShapeClass::Parallelogram, 2).unwrap();
    assert_eq!((r.len(), r.distinct_sizes()), (2, 1));
    let h = hexagon6();
    assert_eq!((h.len(), h.distinct_sizes()), (6, 1));
    assert_eq!(canonical_small(ShapeClass::Pentagon, 4).unwrap().distinct_sizes(), 2);
}

#[test]
fn recipe_rows() {
    for (shape, n, s) in [(ShapeClass::Triangle, 15, 10), (ShapeClass::Trapezoid, 14, 10), (ShapeClass::Parallelogram, 26, 22)] {
        let t = table2_build(shape, n).unwrap();
        assert_eq!((t.shape(), t.len(), t.distinct_sizes(), t.is_t_perfect()), (shape, n, s, true));
    }
}

#[test]
fn bound_samples() {
    assert_eq!(expected_bounds(ShapeClass::Triangle, false, 6).s, Some(SValue::Exact(2)));
    let h = expected_bounds(ShapeClass::Hexagon, false, 20);
    assert_eq!(h.domain, Domain::In);
    assert!(h.s.as_ref().unwrap().admits(15) && h.s.as_ref().unwrap().admits(16));
    assert_eq!(expected_bounds(ShapeClass::Parallelogram, true, 12).domain, Domain::Out);
}

#[test]
fn graph_examples() {
    let rh = canonical_small(ShapeClass::Parallelogram, 2).unwrap();
    let c = census(&rh).unwrap();
    assert_eq!((c.v, c.e, c.f, c.outer_len, c.v2), (4, 4, 2, 4, 4));
    assert_eq!(side_sharing_pairs(&rh), 1);
    let q = census(&quartered()).unwrap();
    assert_eq!((q.v2, q.v3, q.v6, q.outer_len, q.pairs), (3, 4, 0, 6, 3));
    let g = build_gamma(&quartered()).unwrap();
    assert_eq!((g.whites, g.node_count() - g.whites), (4, 3));
    let h = census(&hexagon6()).unwrap();
    assert_eq!((h.v2, h.v6, h.pairs), (6, 1, 6));
    assert!(h.pairs + 3 >= 6);
}

#[test]
fn search_examples() {
    let tri = enumerate_tilings(Some(ShapeClass::Triangle), &SearchBudget::new(5, 4)).unwrap();
    let mut counts: Vec<usize> = tri.tilings.iter().map(|t| t.tiling.len()).collect();
    counts.sort();
    counts.dedup();
    assert_eq!(counts, vec![1, 4]);
    let hex = enumerate_tilings(Some(ShapeClass::Hexagon), &SearchBudget::new(6, 3)).unwrap();
    assert!(hex.tilings.iter().filter(|t| t.tiling.len() == 6).all(|t| t.tiling.distinct_sizes() == 1));
    let hex8 = enumerate_tilings(Some(ShapeClass::Hexagon), &SearchBudget::new(8, 6)).unwrap();
    assert!(hex8.tilings.iter().filter(|t| t.tiling.len() == 8).count() >= 2);
    let trap = enumerate_tilings(Some(ShapeClass::Trapezoid), &SearchBudget::new(3, 2)).unwrap();
    assert!(trap.tilings.iter().filter(|t| t.tiling.len() == 3).all(|t| t.tiling.distinct_sizes() == 1));
}

#[test]
fn scan_examples() {
    let r = theorem_scan(&SearchBudget::new(6, 3)).unwrap();
    assert_eq!(r.max_s(ShapeClass::Triangle, 6), Some(2));
    let w = tritile::format::parse(&r.cell(ShapeClass::Triangle, 6, false).unwrap().witness).unwrap();
    let mut sizes = w.sizes();
    sizes.sort();
    assert_eq!(sizes, vec![sc(1), sc(1), sc(1), sc(1), sc(1), sc(2)]);
    let tp = theorem_scan(&SearchBudget::new(10, 8).t_perfect(true)).unwrap();
    assert!(tp.passed());
    assert!(tp.cell(ShapeClass::Hexagon, 9, true).is_none());
}

#[test]
fn reconstruction_examples() {
    let a = reconstruct(ShapeClass::Hexagon, &[1, 3, 3, 3, 4, 4, 5, 5, 6], &ReconstructOptions::default()).unwrap();
    let t = &a[0].tiling;
    assert_eq!((t.len(), t.distinct_sizes(), t.is_t_perfect()), (9, 5, false));
    let opts = ReconstructOptions { all: true, ..Default::default() };
    let p = reconstruct(ShapeClass::Pentagon, &[1, 1, 1, 2], &opts).unwrap();
    assert_eq!(p.len(), 1);
    assert_eq!(p[0].key, canonical_key(&spiral_pentagon(4).unwrap()).unwrap());
    let sizes = [2, 2, 5, 5, 7, 9, 9, 12, 21, 21, 30, 30, 33, 38, 41, 43];
    let opts = ReconstructOptions { t_perfect: true, ..Default::default() };
    let t = &reconstruct(ShapeClass::Hexagon, &sizes, &opts).unwrap()[0].tiling;
    assert_eq!((t.len(), t.distinct_sizes(), t.is_t_perfect()), (16, 11, true));
    assert!(matches!(reconstruct(ShapeClass::Triangle, &[1, 1], &ReconstructOptions::default()), Err(SearchError::NoSolution)));
}

#[test]
fn canonical_keys() {
    let t = spiral_pentagon(7).unwrap();
    let mirrored = Tiling::from_tiles(
        t.tiles()
            .iter()
            .map(|tile| {
                let v = tile.vertices().map(|p| LatticePoint::new(p.b.clone(), p.a.clone()));
                Tile::from_vertices(&v).unwrap()
            })
            .collect(),
    )
    .unwrap();
    assert_eq!(canonical_key(&t).unwrap(), canonical_key(&mirrored).unwrap());
    assert_eq!(canonical_key(&t).unwrap(), canonical_key(&t.scale(&sc(7))).unwrap());
    assert_ne!(canonical_key(&t).unwrap(), canonical_key(&spiral_pentagon(8).unwrap()).unwrap());
}

#[test]
fn rendering_a_shipped_hexagon() {
    use tritile::render::{render_svg, RenderStyle};
    let c = appendix::tiling('c').unwrap().unwrap();
    let style = RenderStyle { labels: true, stroke_width: 0.0, ..RenderStyle::default() };
    let svg = render_svg(&c, &style);
    assert_eq!(svg.matches("<polygon").count(), 11);
    assert_eq!(svg.matches("<text").count(), 11);
    assert_eq!(svg.matches("<path").count(), 1);
    assert_eq!(svg, render_svg(&c, &style));
    let xs: Vec<f64> = c.region().vertices().iter().map(|p| p.to_cartesian().0).collect();
    let ys: Vec<f64> = c.region().vertices().iter().map(|p| p.to_cartesian().1).collect();
    let span = |v: &[f64]| v.iter().cloned().fold(f64::MIN, f64::max) - v.iter().cloned().fold(f64::MAX, f64::min);
    let attr = |name: &str| -> f64 {
        let i = svg.find(&format!(" {name}=\"")).unwrap() + name.len() + 3;
        svg[i..].split('"').next().unwrap().parse().unwrap()
    };
    assert!((attr("width") / attr("height") - span(&xs) / span(&ys)).abs() < 1e-5);
}
