//! Exact rational scalars used for every length and coordinate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An arbitrary-precision rational number in canonical form
/// (reduced, positive denominator).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactScalar(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational `{0}`")]
pub struct ParseScalarError(pub String);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        ExactScalar(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        ExactScalar(BigRational::from_integer(v))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        ExactScalar(r)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        ExactScalar(self.0.abs())
    }

    /// Exact value times an integer, returned as an integer when it is one.
    pub fn scaled_integer(&self, factor: &BigInt) -> Option<BigInt> {
        let r = &self.0 * BigRational::from_integer(factor.clone());
        r.is_integer().then(|| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty input).
pub fn common_denominator<'a, I: IntoIterator<Item = &'a ExactScalar>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        ExactScalar(BigRational::from_integer(v.into()))
    }
}

impl From<i32> for ExactScalar {
    fn from(v: i32) -> Self {
        ExactScalar::from(v as i64)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(v: BigInt) -> Self {
        ExactScalar::from_bigint(v)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactScalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let parse_int = |t: &str| -> Result<BigInt, ParseScalarError> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(err());
            }
            t.parse::<BigInt>().map_err(|_| err())
        };
        match s.split_once('/') {
            None => Ok(ExactScalar::from_bigint(parse_int(s)?)),
            Some((n, d)) => {
                let n = parse_int(n)?;
                if d.starts_with('-') {
                    return Err(err());
                }
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(err());
                }
                Ok(ExactScalar(BigRational::new(n, d)))
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$m(&rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$m(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl PartialEq<i64> for ExactScalar {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer((*other).into())
    }
}

impl PartialOrd<i64> for ExactScalar {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer((*other).into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a: ExactScalar = "6/4".parse().unwrap();
        assert_eq!(a, ExactScalar::new(3, 2));
        assert_eq!(a.to_string(), "3/2");
        assert_eq!(ExactScalar::new(4, -2).to_string(), "-2");
        assert_eq!("-7/3".parse::<ExactScalar>().unwrap().denom(), &BigInt::from(3));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["3/", "/2", "", "1/0", "a", "1/-2", "1.5", "--1"] {
            assert!(bad.parse::<ExactScalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn lcm_of_denominators() {
        let v = [ExactScalar::new(1, 2), ExactScalar::new(2, 3), ExactScalar::from(5)];
        assert_eq!(common_denominator(&v), BigInt::from(6));
    }
}
