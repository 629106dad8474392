use tritile::constructions::*;
use tritile::sequences::{p64, q64};
use tritile::{ExactScalar, ShapeClass};

#[test]
fn spiral_pentagons_verify() {
    for n in 4..=30 {
        let t = spiral_pentagon(n).unwrap();
        assert!(t.verify().valid, "P_{n}");
        assert_eq!(t.shape(), ShapeClass::Pentagon);
        assert_eq!(t.len(), n);
        assert_eq!(t.distinct_sizes(), (n - 3).max(2));
        let mut sides = t.region().side_lengths();
        sides.sort();
        let mut want: Vec<ExactScalar> = (n - 4..=n).map(|k| ExactScalar::from(p64(k))).collect();
        want.sort();
        assert_eq!(sides, want, "P_{n}");
    }
}

#[test]
fn derived_from_spiral() {
    for n in 4..=30 {
        for (v, shape, extra) in [('a', ShapeClass::Triangle, 2), ('b', ShapeClass::Trapezoid, 1), ('c', ShapeClass::Parallelogram, 1), ('e', ShapeClass::Hexagon, 3)] {
            let t = derived_polygon(n, v).unwrap_or_else(|e| panic!("n={n} {v}: {e}"));
            assert!(t.verify().valid);
            assert_eq!((t.shape(), t.len()), (shape, n + extra), "n={n} {v}");
        }
    }
}

#[test]
fn t_spiral() {
    for n in 12..=30 {
        let t = q_pentagon(n).unwrap();
        assert!(t.verify().valid && t.is_t_perfect());
        assert_eq!(t.distinct_sizes(), n - 4);
        let mut sides = t.region().side_lengths();
        sides.sort();
        let mut want: Vec<ExactScalar> = (n - 4..=n).map(|k| ExactScalar::from(q64(k))).collect();
        want.sort();
        assert_eq!(sides, want);
        for (v, shape, extra, s) in [
            ('a', ShapeClass::Triangle, 2, n - 4),
            ('b', ShapeClass::Trapezoid, 1, n - 4),
            ('c', ShapeClass::Parallelogram, 1, n - 4),
            ('e', ShapeClass::Hexagon, 5, n - 1),
        ] {
            if (v == 'a' && n < 13) || (v == 'e' && n == 16) {
                assert!(t_derived(n, v).is_err());
                continue;
            }
            let d = t_derived(n, v).unwrap_or_else(|e| panic!("n={n} {v}: {e}"));
            assert!(d.verify().valid);
            assert_eq!((d.shape(), d.len(), d.is_t_perfect()), (shape, n + extra, true), "n={n} {v}");
            assert!(d.distinct_sizes() >= s, "n={n} {v}");
            let upper = tritile::bounds::expected_bounds(shape, true, d.len()).upper().unwrap();
            assert!(d.distinct_sizes() as i64 <= upper, "n={n} {v}");
        }
    }
}

#[test]
fn recipes_build() {
    for r in RECIPES {
        let t = table2_build(r.shape, r.n).unwrap_or_else(|e| panic!("{} {}: {e}", r.shape, r.n));
        assert!(t.verify().valid && t.is_t_perfect());
    }
}
