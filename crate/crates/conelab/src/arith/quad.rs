//! Quadratic extension elements `a + b·√D` with exact sign decisions.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Dyadic, Rational, Sign};

/// Scalars usable as the components of a quadratic extension.
pub trait Scalar:
    Clone
    + fmt::Debug
    + Eq
    + Ord
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_int(v: i64) -> Self;
    fn sign(&self) -> Sign;
    /// Exact halving; both scalar domains contain 1/2.
    fn half(&self) -> Self;
}

impl Scalar for Dyadic {
    fn from_int(v: i64) -> Self {
        Dyadic::from_int(v)
    }
    fn sign(&self) -> Sign {
        Dyadic::sign(self)
    }
    fn half(&self) -> Self {
        Dyadic::half(self)
    }
}

impl Scalar for Rational {
    fn from_int(v: i64) -> Self {
        Rational::from_integer(v.into())
    }
    fn sign(&self) -> Sign {
        Sign::of_int(self.numer())
    }
    fn half(&self) -> Self {
        self / Rational::from_int(2)
    }
}

/// `a + b·√D` over scalars `C`; the radicand is part of the type, so the
/// two domains used here (`Quad<Dyadic, 3>` and `Quad<Rational, 2>`) can
/// never be mixed. `D` must be square-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad<C, const D: i64> {
    a: C,
    b: C,
}

impl<C: Scalar, const D: i64> Quad<C, D> {
    pub fn new(a: C, b: C) -> Self {
        Quad { a, b }
    }

    pub fn from_scalar(a: C) -> Self {
        Quad { a, b: C::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_scalar(C::from_int(v))
    }

    /// The radical itself, `0 + 1·√D`.
    pub fn radical() -> Self {
        Quad {
            a: C::zero(),
            b: C::one(),
        }
    }

    pub fn rational_part(&self) -> &C {
        &self.a
    }

    pub fn radical_part(&self) -> &C {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Quad {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Quad {
            a: self.a.clone() - rhs.a.clone(),
            b: self.b.clone() - rhs.b.clone(),
        }
    }

    /// Exact product using √D·√D = D.
    pub fn mul(&self, rhs: &Self) -> Self {
        let d = C::from_int(D);
        Quad {
            a: self.a.clone() * rhs.a.clone() + d * (self.b.clone() * rhs.b.clone()),
            b: self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.a.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Quad {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// The conjugate `a − b·√D`.
    pub fn conj(&self) -> Self {
        Quad {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn half(&self) -> Self {
        Quad {
            a: self.a.half(),
            b: self.b.half(),
        }
    }

    /// Sign of `a + b·√D` as a real number, decided without any
    /// approximation: when the components agree in sign (or one is zero)
    /// the answer is immediate; otherwise the dominant component is found
    /// by comparing a² against D·b².
    pub fn sign(&self) -> Sign {
        let (sa, sb) = (self.a.sign(), self.b.sign());
        match (sa, sb) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (x, y) if x == y => x,
            _ => {
                let a2 = self.a.clone() * self.a.clone();
                let db2 = C::from_int(D) * (self.b.clone() * self.b.clone());
                match a2.cmp(&db2) {
                    std::cmp::Ordering::Greater => sa,
                    std::cmp::Ordering::Less => sb,
                    // Only reachable if √D were rational.
                    std::cmp::Ordering::Equal => Sign::Zero,
                }
            }
        }
    }
}

impl<C: Scalar, const D: i64> Zero for Quad<C, D> {
    fn zero() -> Self {
        Self::from_scalar(C::zero())
    }
    fn is_zero(&self) -> bool {
        Quad::is_zero(self)
    }
}

impl<C: Scalar, const D: i64> Add for Quad<C, D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Quad::add(&self, &rhs)
    }
}
