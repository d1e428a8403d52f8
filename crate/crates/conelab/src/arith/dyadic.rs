//! Dyadic rationals `num / 2^exp` in a canonical normal form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{Rational, Sign};
use crate::{Error, Result};

/// An exact dyadic rational `num / 2^exp`.
///
/// Normal form: `exp == 0` or `num` is odd, so equality and hashing are
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u64,
}

impl Dyadic {
    /// Builds `num / 2^exp`, normalizing. Negative exponents are rejected.
    pub fn new(num: impl Into<BigInt>, exp: i64) -> Result<Self> {
        if exp < 0 {
            return Err(Error::NegativeExponent(exp));
        }
        Ok(Self::normalized(num.into(), exp as u64))
    }

    fn normalized(mut num: BigInt, mut exp: u64) -> Self {
        if num.is_zero() {
            return Dyadic { num, exp: 0 };
        }
        while exp > 0 && num.is_even() {
            num /= 2;
            exp -= 1;
        }
        Dyadic { num, exp }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic {
            num: n.into(),
            exp: 0,
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> u64 {
        self.exp
    }

    pub fn sign(&self) -> Sign {
        Sign::of_int(&self.num)
    }

    /// The integer value when the denominator is 1.
    pub fn as_int(&self) -> Option<&BigInt> {
        (self.exp == 0).then_some(&self.num)
    }

    /// Exact halving; always possible in the dyadic domain.
    pub fn half(&self) -> Self {
        Self::normalized(self.num.clone(), self.exp + 1)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.num.clone(), BigInt::one() << self.exp)
    }

    /// Converts back from a rational whose denominator is a power of two.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let denom = r.denom();
        if denom.is_one() {
            return Some(Dyadic::from_int(r.numer().clone()));
        }
        let tz = denom.trailing_zeros()?;
        if (denom >> tz).is_one() {
            Some(Self::normalized(r.numer().clone(), tz))
        } else {
            None
        }
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let num = (&self.num << (exp - self.exp)) + (&rhs.num << (exp - rhs.exp));
        Dyadic::normalized(num, exp)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let num = (&self.num << (exp - self.exp)) - (&rhs.num << (exp - rhs.exp));
        Dyadic::normalized(num, exp)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::normalized(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            exp: self.exp,
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Dyadic {
            type Output = Dyadic;
            fn $method(self, rhs: Dyadic) -> Dyadic {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        (&self.num << (exp - self.exp)).cmp(&(&other.num << (exp - other.exp)))
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Dyadic::from_int(1)
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << self.exp)
        }
    }
}
