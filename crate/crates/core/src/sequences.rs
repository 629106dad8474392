//! Padovan spiral numbers `p` and the shifted sequence `q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::scalar::ExactScalar;

/// `p(0..=n)`.
pub fn padovan_upto(n: usize) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let x = if i < 3 { BigInt::one() } else { &v[i - 3] + &v[i - 2] };
        v.push(x);
    }
    v
}

pub fn padovan(n: usize) -> BigInt {
    padovan_upto(n).pop().unwrap()
}

/// `q(8..=n)` indexed from 0, so `q_upto(n)[i] = q(8 + i)`.
fn q_upto(n: usize) -> Vec<BigInt> {
    assert!(n >= 8, "q is defined from index 8");
    let mut v: Vec<BigInt> = Vec::with_capacity(n - 7);
    for i in 8..=n {
        let x = match i {
            8 => BigInt::from(8),
            9 => BigInt::from(11),
            10 => BigInt::from(9),
            _ => &v[i - 11] + &v[i - 10],
        };
        v.push(x);
    }
    v
}

pub fn q_seq(n: usize) -> BigInt {
    q_upto(n).pop().unwrap()
}

/// Small-index conveniences for the constructions.
pub fn p64(n: usize) -> i64 {
    i64::try_from(padovan(n)).expect("p(n) fits in i64")
}

pub fn q64(n: usize) -> i64 {
    i64::try_from(q_seq(n)).expect("q(n) fits in i64")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub checked_up_to: usize,
    pub violations: Vec<String>,
    /// Indices excluded from the inequality, with the inequality indeed failing there.
    pub exempt: Vec<usize>,
}

impl SequenceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks monotonicity of `p` and `p(n−3) < p(n)/2 < p(n−2)` for `n ∉ {3,4,6}`.
pub fn check_padovan_bounds(max_n: usize) -> SequenceReport {
    let p = padovan_upto(max_n.max(6));
    let mut violations = Vec::new();
    let mut exempt = Vec::new();
    if p[3] != BigInt::from(2) || p[4] != BigInt::from(2) {
        violations.push("p(3) = p(4) = 2".into());
    }
    for n in 5..=max_n {
        if p[n] <= p[n - 1] {
            violations.push(format!("p({n}) > p({})", n - 1));
        }
    }
    for n in 3..=max_n {
        let twice_low = &p[n - 3] * 2;
        let twice_high = &p[n - 2] * 2;
        let holds = twice_low < p[n] && p[n] < twice_high;
        match (holds, [3, 4, 6].contains(&n)) {
            (false, false) => violations.push(format!("sandwich fails at n={n}")),
            (false, true) => exempt.push(n),
            _ => {}
        }
    }
    SequenceReport { checked_up_to: max_n, violations, exempt }
}

/// Checks monotonicity of `q`, `q(n) > 12`, the difference identity
/// `q(n−1) − q(n−2) = q(n−6)`, and that `(q(n−1) − q(n−2))/3` avoids
/// `{2,3,5,7,8,9,11,12} ∪ {q(m)}` for `n ∈ {12,…,15} ∪ {17,…}`.
pub fn check_q_bounds(max_n: usize) -> SequenceReport {
    let qs = q_upto(max_n.max(12));
    let q = |i: usize| &qs[i - 8];
    let mut violations = Vec::new();
    let mut exempt = Vec::new();
    for n in 11..=max_n {
        if q(n) <= q(n - 1) {
            violations.push(format!("q({n}) > q({})", n - 1));
        }
        if *q(n) <= BigInt::from(12) {
            violations.push(format!("q({n}) > 12"));
        }
    }
    for n in 14..=max_n {
        if q(n - 1) - q(n - 2) != *q(n - 6) {
            violations.push(format!("difference identity at n={n}"));
        }
    }
    for n in 12..=max_n {
        let d = q(n - 1) - q(n - 2);
        let forbidden = if d.is_zero() || &d % 3 != BigInt::zero() {
            false
        } else {
            let v = &d / 3;
            [2, 3, 5, 7, 8, 9, 11, 12].iter().any(|x| v == BigInt::from(*x)) || qs.contains(&v)
        };
        match (forbidden, n == 16) {
            (true, false) => violations.push(format!("(q({})-q({}))/3 is forbidden", n - 1, n - 2)),
            (true, true) => exempt.push(n),
            _ => {}
        }
    }
    SequenceReport { checked_up_to: max_n, violations, exempt }
}

/// `(q(n−1) − q(n−2)) / 3` as an exact rational.
pub fn q_third_difference(n: usize) -> ExactScalar {
    ExactScalar::from(q_seq(n - 1) - q_seq(n - 2)) / ExactScalar::from(3)
}
