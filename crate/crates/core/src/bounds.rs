//! Known domains and values of the maximal number of distinct tile sizes,
//! per shape, for general and for t-perfect tilings.

use serde::Serialize;

use crate::geom::ShapeClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Domain {
    In,
    Out,
    Unknown,
}

/// The value of the maximum at some `n`: known exactly, known to be one of
/// a few candidates, or unknown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SValue {
    Exact(i64),
    OneOf(Vec<i64>),
    Unknown,
}

impl SValue {
    pub fn upper(&self) -> Option<i64> {
        match self {
            SValue::Exact(v) => Some(*v),
            SValue::OneOf(v) => v.iter().max().copied(),
            SValue::Unknown => None,
        }
    }

    pub fn lower(&self) -> Option<i64> {
        match self {
            SValue::Exact(v) => Some(*v),
            SValue::OneOf(v) => v.iter().min().copied(),
            SValue::Unknown => None,
        }
    }

    pub fn admits(&self, s: i64) -> bool {
        match self {
            SValue::Exact(v) => *v == s,
            SValue::OneOf(v) => v.contains(&s),
            SValue::Unknown => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub domain: Domain,
    /// `None` outside the domain.
    pub s: Option<SValue>,
}

impl BoundEntry {
    fn out() -> Self {
        BoundEntry { domain: Domain::Out, s: None }
    }

    fn exact(v: i64) -> Self {
        BoundEntry { domain: Domain::In, s: Some(SValue::Exact(v)) }
    }

    fn one_of(v: &[i64]) -> Self {
        BoundEntry { domain: Domain::In, s: Some(SValue::OneOf(v.to_vec())) }
    }

    /// Upper bound on `s` for any tiling with these parameters.
    pub fn upper(&self) -> Option<i64> {
        self.s.as_ref().and_then(|s| s.upper())
    }
}

pub fn expected_bounds(shape: ShapeClass, t_perfect: bool, n: usize) -> BoundEntry {
    assert!(n >= 1);
    let k = n as i64;
    use ShapeClass::*;
    match (shape, t_perfect) {
        (Triangle, false) => match n {
            1 | 4 => BoundEntry::exact(1),
            6 => BoundEntry::exact(2),
            7.. => BoundEntry::exact(k - 5),
            _ => BoundEntry::out(),
        },
        (Trapezoid, false) => match n {
            3 => BoundEntry::exact(1),
            5 => BoundEntry::exact(2),
            6.. => BoundEntry::exact(k - 4),
            _ => BoundEntry::out(),
        },
        (Parallelogram, false) => match n {
            2 | 4 => BoundEntry::exact(1),
            5 => BoundEntry::exact(2),
            6.. => BoundEntry::exact(k - 4),
            _ => BoundEntry::out(),
        },
        (Pentagon, false) => match n {
            4 => BoundEntry::exact(2),
            5.. => BoundEntry::exact(k - 3),
            _ => BoundEntry::out(),
        },
        (Hexagon, false) => match n {
            6..=8 => BoundEntry::exact(k - 5),
            9..=19 | 21 | 22 | 24 | 25 => BoundEntry::exact(k - 4),
            20 | 23 | 26.. => BoundEntry::one_of(&[k - 5, k - 4]),
            _ => BoundEntry::out(),
        },
        (Triangle, true) => match n {
            1 => BoundEntry::exact(1),
            16 => BoundEntry::exact(k - 6),
            15 | 17..=26 | 28 => BoundEntry::exact(k - 5),
            27 | 29.. => BoundEntry::one_of(&[k - 6, k - 5]),
            _ => BoundEntry::out(),
        },
        (Trapezoid, true) => match n {
            14 | 16..=25 | 27 => BoundEntry::exact(k - 4),
            13 | 15 | 26 | 28.. => BoundEntry::one_of(&[k - 5, k - 4]),
            _ => BoundEntry::out(),
        },
        (Parallelogram, true) => match n {
            2 => BoundEntry::exact(1),
            15 | 18 | 19 | 21 | 22 | 23 | 26 => BoundEntry::exact(k - 4),
            13 | 14 | 16 | 17 | 20 | 24 | 25 | 27.. => BoundEntry::one_of(&[k - 5, k - 4]),
            _ => BoundEntry::out(),
        },
        (Pentagon, true) => match n {
            12.. => BoundEntry::exact(k - 4),
            _ => BoundEntry::out(),
        },
        (Hexagon, true) => match n {
            11 | 14 | 15 | 17 | 18 | 19 | 22 => BoundEntry::exact(k - 4),
            16 | 20 | 21 | 23 => BoundEntry::one_of(&[k - 5, k - 4]),
            24.. => BoundEntry::one_of(&[k - 6, k - 5, k - 4]),
            12 | 13 => BoundEntry { domain: Domain::Unknown, s: Some(SValue::Unknown) },
            _ => BoundEntry::out(),
        },
    }
}

/// Upper bound on `s` valid for every tiling of the shape with `n` tiles,
/// from the general table (t-perfect tilings are a special case).
pub fn s_upper(shape: ShapeClass, n: usize) -> Option<i64> {
    expected_bounds(shape, false, n).upper()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples() {
        assert_eq!(expected_bounds(ShapeClass::Triangle, false, 6), BoundEntry::exact(2));
        assert_eq!(expected_bounds(ShapeClass::Hexagon, false, 20).s, Some(SValue::OneOf(vec![15, 16])));
        assert_eq!(expected_bounds(ShapeClass::Parallelogram, true, 12).domain, Domain::Out);
        assert_eq!(expected_bounds(ShapeClass::Hexagon, true, 12).domain, Domain::Unknown);
        assert_eq!(expected_bounds(ShapeClass::Triangle, false, 5).domain, Domain::Out);
    }
}
