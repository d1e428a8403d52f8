//! Fraction-field coefficients: elements of ℚ or ℚ(√d), used for exact
//! division and divisor enumeration. The radicand is carried by the
//! surrounding computation (0 marks a plain rational field).

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::arith::{Rational, Sign};

/// An element `a + b·√d` of a model's coefficient fraction field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldCoeff {
    pub a: Rational,
    pub b: Rational,
}

impl FieldCoeff {
    pub fn new(a: Rational, b: Rational) -> Self {
        FieldCoeff { a, b }
    }

    pub fn zero() -> Self {
        FieldCoeff::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        FieldCoeff::from_rational(Rational::one())
    }

    pub fn from_rational(a: Rational) -> Self {
        FieldCoeff {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        FieldCoeff::from_rational(Rational::from_integer(v.into()))
    }

    /// `0 + 1·√d`.
    pub fn radical() -> Self {
        FieldCoeff {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The exact integer value, if there is one.
    pub fn as_int(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        FieldCoeff {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        FieldCoeff {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    pub fn neg(&self) -> Self {
        FieldCoeff {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self, d: i64) -> Self {
        let d = Rational::from_integer(d.into());
        FieldCoeff {
            a: &self.a * &rhs.a + &d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    /// Multiplicative inverse via the conjugate; `self` must be nonzero.
    pub fn inv(&self, d: i64) -> Self {
        let dr = Rational::from_integer(d.into());
        let norm = &self.a * &self.a - dr * &self.b * &self.b;
        debug_assert!(!norm.is_zero(), "inverse of zero or of a zero-norm element");
        FieldCoeff {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
        }
    }

    pub fn div(&self, rhs: &Self, d: i64) -> Self {
        self.mul(&rhs.inv(d), d)
    }

    /// Exact sign; same case split as the domain-level quadratic type.
    pub fn sign(&self, d: i64) -> Sign {
        let sa = Sign::of_int(self.a.numer());
        let sb = Sign::of_int(self.b.numer());
        match (sa, sb) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (x, y) if x == y => x,
            _ => {
                let a2 = &self.a * &self.a;
                let db2 = Rational::from_integer(d.into()) * &self.b * &self.b;
                match a2.cmp(&db2) {
                    std::cmp::Ordering::Greater => sa,
                    std::cmp::Ordering::Less => sb,
                    std::cmp::Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    pub fn scale_pow2(&self, k: i64) -> Self {
        let two = if k >= 0 {
            Rational::from_integer(BigInt::one() << k as u64)
        } else {
            Rational::new(BigInt::one(), BigInt::one() << (-k) as u64)
        };
        FieldCoeff {
            a: &self.a * &two,
            b: &self.b * &two,
        }
    }
}

/// √r for a non-negative rational, if the result is rational.
pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    (&ns * &ns == *r.numer() && &ds * &ds == *r.denom()).then(|| Rational::new(ns, ds))
}

/// The positive square root of `t` inside ℚ(√d), when it exists.
///
/// `t = p + q√d` is a square iff it is non-negative and either `q = 0`
/// with `p` a rational square or `d`·(rational square), or `q ≠ 0` with
/// `p² − d·q²` a rational square `r²` and one of `(p ± r)/2` a rational
/// square `α²` (then `β = q/(2α)`).
pub(crate) fn sqrt_in_field(t: &FieldCoeff, d: i64) -> Option<FieldCoeff> {
    if t.is_zero() {
        return Some(FieldCoeff::zero());
    }
    if t.sign(d) == Sign::Negative {
        return None;
    }
    if t.b.is_zero() {
        if let Some(alpha) = rational_sqrt(&t.a) {
            return Some(FieldCoeff::from_rational(alpha));
        }
        if d != 0 {
            let dr = Rational::from_integer(d.into());
            if let Some(beta) = rational_sqrt(&(&t.a / &dr)) {
                return Some(FieldCoeff::new(Rational::zero(), beta));
            }
        }
        return None;
    }
    if d == 0 {
        return None;
    }
    let dr = Rational::from_integer(d.into());
    let disc = &t.a * &t.a - &dr * &t.b * &t.b;
    let r = rational_sqrt(&disc)?;
    let two = Rational::from_integer(2.into());
    for root in [(&t.a + &r) / &two, (&t.a - &r) / &two] {
        if let Some(alpha) = rational_sqrt(&root) {
            if alpha.is_zero() {
                continue;
            }
            let beta = &t.b / (&two * &alpha);
            let cand = FieldCoeff::new(alpha, beta);
            if cand.mul(&cand, d) == *t {
                let cand = if cand.sign(d) == Sign::Negative {
                    cand.neg()
                } else {
                    cand
                };
                return Some(cand);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn field_inverse() {
        // 1/(1+√2) = √2 − 1
        let x = FieldCoeff::new(rat(1, 1), rat(1, 1));
        assert_eq!(x.inv(2), FieldCoeff::new(rat(-1, 1), rat(1, 1)));
        let y = FieldCoeff::from_rational(rat(3, 4));
        assert_eq!(y.inv(0), FieldCoeff::from_rational(rat(4, 3)));
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
    }

    #[test]
    fn square_roots_in_quadratic_fields() {
        // √3 as an element of ℚ(√3)
        let three = FieldCoeff::from_int(3);
        assert_eq!(sqrt_in_field(&three, 3), Some(FieldCoeff::radical()));
        // √(3 + 2√2) = 1 + √2
        let t = FieldCoeff::new(rat(3, 1), rat(2, 1));
        assert_eq!(
            sqrt_in_field(&t, 2),
            Some(FieldCoeff::new(rat(1, 1), rat(1, 1)))
        );
        // 2 + √2 is not a square in ℚ(√2): p²−dq² = 2, not a square
        assert_eq!(sqrt_in_field(&FieldCoeff::new(rat(2, 1), rat(1, 1)), 2), None);
        // 5 is not a square in ℚ(√3)
        assert_eq!(sqrt_in_field(&FieldCoeff::from_int(5), 3), None);
        // 12 = (2√3)² in ℚ(√3)
        assert_eq!(
            sqrt_in_field(&FieldCoeff::from_int(12), 3),
            Some(FieldCoeff::new(rat(0, 1), rat(2, 1)))
        );
    }
}
