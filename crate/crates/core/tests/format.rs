use proptest::prelude::*;

use tritile::appendix;
use tritile::constructions::{derived_polygon, spiral_pentagon, t_derived};
use tritile::format::{parse, serialize};
use tritile::geom::Symmetry;
use tritile::search::canonical_key;
use tritile::{ExactScalar, LatticePoint, Tiling};

#[test]
fn shipped_files_round_trip() {
    for row in appendix::ROWS.iter() {
        let t = appendix::tiling(row.letter).unwrap().unwrap();
        let text = serialize(&t);
        assert_eq!(serialize(&parse(&text).unwrap()), text, "({})", row.letter);
        assert_eq!(parse(&text).unwrap(), t);
    }
    let q = appendix::tiling('q').unwrap().unwrap();
    assert_eq!(q.len(), 22);
}

#[test]
fn parse_errors_name_the_line() {
    let e = parse("tritile 1\nP 0 0\nP 3/ 0\n").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(parse("").is_err());
    assert!(parse("tritile 2\n").is_err());
}

fn construction(n: usize, v: u8) -> Tiling {
    match v {
        0 => spiral_pentagon(n).unwrap(),
        1 => derived_polygon(n, 'e').unwrap(),
        2 => derived_polygon(n, 'a').unwrap(),
        _ => t_derived(n + 8, 'c').unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn round_trip_is_byte_identical(n in 4usize..14, v in 0u8..4, p in 1i64..30, q in 1i64..7) {
        let t = construction(n, v).scale(&ExactScalar::new(p, q));
        let text = serialize(&t);
        prop_assert_eq!(serialize(&parse(&text).unwrap()), text);
    }

    #[test]
    fn scaling_preserves_everything(n in 4usize..14, v in 0u8..4, p in 1i64..30, q in 1i64..7) {
        let t = construction(n, v);
        let k = ExactScalar::new(p, q);
        let u = t.scale(&k);
        prop_assert!(u.verify().valid);
        prop_assert_eq!(u.stats().s, t.stats().s);
        prop_assert_eq!(u.stats().v_pi, t.stats().v_pi);
        prop_assert_eq!(u.is_t_perfect(), t.is_t_perfect());
        prop_assert_eq!(canonical_key(&u).unwrap(), canonical_key(&t).unwrap());
    }

    #[test]
    fn symmetries_preserve_everything(n in 4usize..14, v in 0u8..4, sym in 0usize..12, da in -9i64..9, db in -9i64..9) {
        let t = construction(n, v);
        let s = Symmetry::all().nth(sym).unwrap();
        let u = t.apply(s).translate(&LatticePoint::new(da, db));
        prop_assert!(u.verify().valid);
        prop_assert_eq!(u.shape(), t.shape());
        prop_assert_eq!(u.stats().v_pi, t.stats().v_pi);
        prop_assert_eq!(canonical_key(&u).unwrap(), canonical_key(&t).unwrap());
        prop_assert_eq!(tritile::gamma::census(&u).unwrap(), tritile::gamma::census(&t).unwrap());
    }
}
