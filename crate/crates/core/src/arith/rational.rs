use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator.
///
/// Every closed-form quantity in this crate is carried as an
/// `ExactRational`; nothing is ever rounded through floating point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// `numerator / denominator`, normalized. Panics on a zero denominator.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        ExactRational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_big(numerator: BigInt, denominator: BigInt) -> Result<Self, Error> {
        if denominator.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(ExactRational(BigRational::new(numerator, denominator)))
    }

    pub fn integer(n: i64) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        ExactRational(self.0.recip())
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Re-normalizes the stored fraction. A no-op for any value built
    /// through the public API; exposed so the invariant can be tested.
    pub fn normalized(&self) -> Self {
        let mut r = self.0.clone();
        // BigRational keeps itself reduced; rebuild from raw parts anyway.
        r = BigRational::new(r.numer().clone(), r.denom().clone());
        ExactRational(r)
    }
}

impl Default for ExactRational {
    fn default() -> Self {
        ExactRational::zero()
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::integer(n)
    }
}

impl From<u64> for ExactRational {
    fn from(n: u64) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }
}

impl From<i32> for ExactRational {
    fn from(n: i32) -> Self {
        ExactRational::integer(n.into())
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        ExactRational(BigRational::from_integer(n))
    }
}

impl fmt::Display for ExactRational {
    /// Always `num/den`, including integers (`3/1`), so serialized values
    /// parse back without ambiguity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        ExactRational::from_big(n, d)
    }
}

impl serde::Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for ExactRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'b ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<i64> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: i64) -> ExactRational {
                ExactRational((self.0).$method(BigRational::from_integer(rhs.into())))
            }
        }
        impl<'a> $tr<i64> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: i64) -> ExactRational {
                ExactRational((&self.0).$method(BigRational::from_integer(rhs.into())))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl<'a> Neg for &'a ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |a, b| a + b)
    }
}

impl PartialEq<i64> for ExactRational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer((*other).into())
    }
}

impl PartialOrd<i64> for ExactRational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer((*other).into()))
    }
}

/// Shorthand for `ExactRational::new`.
pub fn q(numerator: i64, denominator: i64) -> ExactRational {
    ExactRational::new(numerator, denominator)
}
