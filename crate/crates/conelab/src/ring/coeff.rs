//! Domain-tagged coefficients for the four coefficient rings.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::{CoeffDomain, FieldCoeff};
use crate::arith::{Dyadic, Quad, Rational, Sign};
use crate::{Error, Result};

/// A coefficient in one of the domains ℤ, ℤ[1/2], ℤ[1/2][√3] or ℚ(√2).
///
/// Mixing variants is a [`Error::DomainMismatch`]; inside a model all
/// coefficients share one variant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Int(BigInt),
    Dyadic(Dyadic),
    Sqrt3(Quad<Dyadic, 3>),
    Sqrt2(Quad<Rational, 2>),
}

impl Coeff {
    pub fn domain(&self) -> CoeffDomain {
        match self {
            Coeff::Int(_) => CoeffDomain::Int,
            Coeff::Dyadic(_) => CoeffDomain::Dyadic,
            Coeff::Sqrt3(_) => CoeffDomain::DyadicSqrt3,
            Coeff::Sqrt2(_) => CoeffDomain::RationalSqrt2,
        }
    }

    pub fn zero(domain: CoeffDomain) -> Coeff {
        Coeff::from_int(domain, 0)
    }

    pub fn one(domain: CoeffDomain) -> Coeff {
        Coeff::from_int(domain, 1)
    }

    pub fn from_int(domain: CoeffDomain, v: impl Into<BigInt>) -> Coeff {
        let v = v.into();
        match domain {
            CoeffDomain::Int => Coeff::Int(v),
            CoeffDomain::Dyadic => Coeff::Dyadic(Dyadic::from_int(v)),
            CoeffDomain::DyadicSqrt3 => {
                Coeff::Sqrt3(Quad::from_scalar(Dyadic::from_int(v)))
            }
            CoeffDomain::RationalSqrt2 => {
                Coeff::Sqrt2(Quad::from_scalar(Rational::from_integer(v)))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Int(n) => n.is_zero(),
            Coeff::Dyadic(d) => d.sign() == Sign::Zero,
            Coeff::Sqrt3(q) => q.is_zero(),
            Coeff::Sqrt2(q) => q.is_zero(),
        }
    }

    pub fn sign(&self) -> Sign {
        match self {
            Coeff::Int(n) => Sign::of_int(n),
            Coeff::Dyadic(d) => d.sign(),
            Coeff::Sqrt3(q) => q.sign(),
            Coeff::Sqrt2(q) => q.sign(),
        }
    }

    pub fn add(&self, rhs: &Coeff) -> Result<Coeff> {
        match (self, rhs) {
            (Coeff::Int(a), Coeff::Int(b)) => Ok(Coeff::Int(a + b)),
            (Coeff::Dyadic(a), Coeff::Dyadic(b)) => Ok(Coeff::Dyadic(a + b)),
            (Coeff::Sqrt3(a), Coeff::Sqrt3(b)) => Ok(Coeff::Sqrt3(a.add(b))),
            (Coeff::Sqrt2(a), Coeff::Sqrt2(b)) => Ok(Coeff::Sqrt2(a.add(b))),
            _ => Err(Error::DomainMismatch),
        }
    }

    pub fn sub(&self, rhs: &Coeff) -> Result<Coeff> {
        match (self, rhs) {
            (Coeff::Int(a), Coeff::Int(b)) => Ok(Coeff::Int(a - b)),
            (Coeff::Dyadic(a), Coeff::Dyadic(b)) => Ok(Coeff::Dyadic(a - b)),
            (Coeff::Sqrt3(a), Coeff::Sqrt3(b)) => Ok(Coeff::Sqrt3(a.sub(b))),
            (Coeff::Sqrt2(a), Coeff::Sqrt2(b)) => Ok(Coeff::Sqrt2(a.sub(b))),
            _ => Err(Error::DomainMismatch),
        }
    }

    pub fn mul(&self, rhs: &Coeff) -> Result<Coeff> {
        match (self, rhs) {
            (Coeff::Int(a), Coeff::Int(b)) => Ok(Coeff::Int(a * b)),
            (Coeff::Dyadic(a), Coeff::Dyadic(b)) => Ok(Coeff::Dyadic(a * b)),
            (Coeff::Sqrt3(a), Coeff::Sqrt3(b)) => Ok(Coeff::Sqrt3(a.mul(b))),
            (Coeff::Sqrt2(a), Coeff::Sqrt2(b)) => Ok(Coeff::Sqrt2(a.mul(b))),
            _ => Err(Error::DomainMismatch),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Int(n) => Coeff::Int(-n),
            Coeff::Dyadic(d) => Coeff::Dyadic(-d),
            Coeff::Sqrt3(q) => Coeff::Sqrt3(q.neg()),
            Coeff::Sqrt2(q) => Coeff::Sqrt2(q.neg()),
        }
    }

    /// The exact integer value, if there is one.
    pub fn as_int(&self) -> Option<BigInt> {
        match self {
            Coeff::Int(n) => Some(n.clone()),
            Coeff::Dyadic(d) => d.as_int().cloned(),
            Coeff::Sqrt3(q) => q
                .radical_part()
                .sign()
                .eq(&Sign::Zero)
                .then(|| q.rational_part().as_int().cloned())
                .flatten(),
            Coeff::Sqrt2(q) => (q.radical_part().is_zero()
                && q.rational_part().is_integer())
            .then(|| q.rational_part().to_integer()),
        }
    }

    /// Exact halving inside the domain; `None` when the half leaves it
    /// (odd integers in ℤ).
    pub fn half_exact(&self) -> Option<Coeff> {
        match self {
            Coeff::Int(n) => n.is_even().then(|| Coeff::Int(n / 2)),
            Coeff::Dyadic(d) => Some(Coeff::Dyadic(d.half())),
            Coeff::Sqrt3(q) => Some(Coeff::Sqrt3(q.half())),
            Coeff::Sqrt2(q) => Some(Coeff::Sqrt2(q.half())),
        }
    }

    pub fn to_field(&self) -> FieldCoeff {
        match self {
            Coeff::Int(n) => FieldCoeff::from_int(n.clone()),
            Coeff::Dyadic(d) => FieldCoeff::from_rational(d.to_rational()),
            Coeff::Sqrt3(q) => FieldCoeff::new(
                q.rational_part().to_rational(),
                q.radical_part().to_rational(),
            ),
            Coeff::Sqrt2(q) => {
                FieldCoeff::new(q.rational_part().clone(), q.radical_part().clone())
            }
        }
    }

    /// Converts a fraction-field value back into the domain, when it lies
    /// inside it.
    pub fn from_field(domain: CoeffDomain, fc: &FieldCoeff) -> Option<Coeff> {
        match domain {
            CoeffDomain::Int => {
                (fc.b.is_zero() && fc.a.is_integer()).then(|| Coeff::Int(fc.a.to_integer()))
            }
            CoeffDomain::Dyadic => {
                if !fc.b.is_zero() {
                    return None;
                }
                Dyadic::from_rational(&fc.a).map(Coeff::Dyadic)
            }
            CoeffDomain::DyadicSqrt3 => {
                let a = Dyadic::from_rational(&fc.a)?;
                let b = Dyadic::from_rational(&fc.b)?;
                Some(Coeff::Sqrt3(Quad::new(a, b)))
            }
            CoeffDomain::RationalSqrt2 => {
                Some(Coeff::Sqrt2(Quad::new(fc.a.clone(), fc.b.clone())))
            }
        }
    }

    /// 2-adic valuation of the coefficient (minimum over the two quadratic
    /// components); `None` for zero.
    pub(crate) fn two_adic_valuation(&self) -> Option<i64> {
        fn v2_int(n: &BigInt) -> Option<i64> {
            n.trailing_zeros().map(|t| t as i64)
        }
        fn v2_rat(r: &Rational) -> Option<i64> {
            let num = v2_int(r.numer())?;
            let den = v2_int(r.denom()).unwrap_or(0);
            Some(num - den)
        }
        fn v2_dyadic(d: &Dyadic) -> Option<i64> {
            v2_int(d.num()).map(|v| v - d.exp() as i64)
        }
        match self {
            Coeff::Int(n) => v2_int(n),
            Coeff::Dyadic(d) => v2_dyadic(d),
            Coeff::Sqrt3(q) => {
                let parts = [v2_dyadic(q.rational_part()), v2_dyadic(q.radical_part())];
                parts.into_iter().flatten().min()
            }
            Coeff::Sqrt2(q) => {
                let parts = [v2_rat(q.rational_part()), v2_rat(q.radical_part())];
                parts.into_iter().flatten().min()
            }
        }
    }

    /// Odd part of the numerator content: the gcd of the odd parts of the
    /// component numerators. Constant divisors of an element must have an
    /// odd part dividing this in the dyadic domains.
    pub(crate) fn odd_numerator_content(&self) -> BigInt {
        fn odd_part(mut n: BigInt) -> BigInt {
            n = n.abs();
            while !n.is_zero() && n.is_even() {
                n /= 2;
            }
            n
        }
        let fc = self.to_field();
        odd_part(fc.a.numer().clone()).gcd(&odd_part(fc.b.numer().clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ModelId;

    #[test]
    fn integer_detection() {
        let c = Coeff::from_int(CoeffDomain::DyadicSqrt3, 7);
        assert_eq!(c.as_int(), Some(BigInt::from(7)));
        let d = Coeff::Dyadic(Dyadic::new(1, 1).unwrap());
        assert_eq!(d.as_int(), None);
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let a = Coeff::from_int(CoeffDomain::Int, 1);
        let b = Coeff::from_int(CoeffDomain::Dyadic, 1);
        assert_eq!(a.add(&b), Err(Error::DomainMismatch));
    }

    #[test]
    fn field_round_trip() {
        for domain in [
            CoeffDomain::Int,
            CoeffDomain::Dyadic,
            CoeffDomain::DyadicSqrt3,
            CoeffDomain::RationalSqrt2,
        ] {
            let c = Coeff::from_int(domain, 6);
            assert_eq!(Coeff::from_field(domain, &c.to_field()), Some(c));
        }
        // 1/3 is not dyadic
        let third = FieldCoeff::new(Rational::new(1.into(), 3.into()), Rational::zero());
        assert_eq!(Coeff::from_field(CoeffDomain::Dyadic, &third), None);
        assert!(Coeff::from_field(CoeffDomain::RationalSqrt2, &third).is_some());
    }

    #[test]
    fn two_adic_valuations() {
        assert_eq!(Coeff::from_int(CoeffDomain::Int, 12).two_adic_valuation(), Some(2));
        assert_eq!(
            Coeff::Dyadic(Dyadic::new(3, 2).unwrap()).two_adic_valuation(),
            Some(-2)
        );
        assert_eq!(Coeff::zero(CoeffDomain::Int).two_adic_valuation(), None);
        let _ = ModelId::ALL;
    }

    #[test]
    fn odd_content() {
        assert_eq!(
            Coeff::from_int(CoeffDomain::Dyadic, 12).odd_numerator_content(),
            BigInt::from(3)
        );
        let q = Coeff::Sqrt3(Quad::new(Dyadic::from_int(0), Dyadic::from_int(1)));
        assert_eq!(q.odd_numerator_content(), BigInt::from(1));
    }
}
