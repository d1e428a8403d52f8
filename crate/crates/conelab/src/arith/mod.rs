//! Exact scalar arithmetic: arbitrary-precision integers, dyadic
//! rationals and quadratic extensions `a + b·√d`, with sign decisions
//! made purely by integer comparisons.

mod dyadic;
mod quad;

pub use dyadic::Dyadic;
pub use quad::{Quad, Scalar};

use num_bigint::BigInt;
use num_integer::Integer as _;

/// Arbitrary-precision signed integer, the domain of numerals.
pub type Int = BigInt;

/// Arbitrary-precision rational, the scalar domain of the √2 model.
pub type Rational = num_rational::BigRational;

/// Exact sign of a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub(crate) fn of_int(n: &BigInt) -> Sign {
        match n.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }
}

/// Floor division of an integer by two, `⌊a/2⌋`.
pub fn floor_half_int(a: &Int) -> Int {
    a.div_floor(&Int::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_half_examples() {
        assert_eq!(floor_half_int(&Int::from(4)), Int::from(2));
        assert_eq!(floor_half_int(&Int::from(5)), Int::from(2));
        assert_eq!(floor_half_int(&Int::from(0)), Int::from(0));
        assert_eq!(floor_half_int(&Int::from(1)), Int::from(0));
        assert_eq!(floor_half_int(&Int::from(-5)), Int::from(-3));
    }
}
