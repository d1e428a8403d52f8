//! Checked members of a model's positive cone and their operations.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{Coeff, ModelId, Monomial, RawPoly, Var};
use crate::arith::{floor_half_int, Sign};
use crate::{Error, Result};

/// A verified member of a model's positive cone: all coefficients in the
/// coefficient domain, free term in ℤ, non-negative under the model order,
/// no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyElem {
    model: ModelId,
    terms: BTreeMap<Monomial, Coeff>,
}

/// Parity of an element, with the witnessing half. `Even(y)` means the
/// element equals `2y`, `Odd(y)` that it equals `2y + 1`, with `y` itself
/// a member; in weak models an element may be neither.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parity {
    Even(PolyElem),
    Odd(PolyElem),
    Neither,
}

impl Parity {
    pub fn is_even(&self) -> bool {
        matches!(self, Parity::Even(_))
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, Parity::Odd(_))
    }

    pub fn is_neither(&self) -> bool {
        matches!(self, Parity::Neither)
    }
}

impl PolyElem {
    pub(super) fn from_parts_unchecked(
        model: ModelId,
        terms: BTreeMap<Monomial, Coeff>,
    ) -> Self {
        let elem = PolyElem { model, terms };
        debug_assert!(elem.to_raw().is_member(), "invariant violated: {elem:?}");
        elem
    }

    /// The constant polynomial `k`; negative numerals are outside the cone.
    pub fn numeral(k: impl Into<BigInt>, model: ModelId) -> Result<Self> {
        let k = k.into();
        if k.is_negative() {
            return Err(Error::OutOfCone(format!("numeral {k}")));
        }
        let mut terms = BTreeMap::new();
        let c = Coeff::from_int(model.coeff_domain(), k);
        if !c.is_zero() {
            terms.insert(Monomial::one(model.var_count()), c);
        }
        Ok(PolyElem { model, terms })
    }

    pub fn zero(model: ModelId) -> Self {
        Self::numeral(0, model).expect("0 is a numeral")
    }

    pub fn one(model: ModelId) -> Self {
        Self::numeral(1, model).expect("1 is a numeral")
    }

    pub fn variable(model: ModelId, v: Var) -> Result<Self> {
        RawPoly::variable(model, v)?.to_member()
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// The free term; members always have an integer one.
    pub fn free_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::one(self.model.var_count()))
            .and_then(Coeff::as_int)
            .unwrap_or_default()
    }

    /// The constant value, if the element is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.keys().all(Monomial::is_one) {
            Some(self.free_term())
        } else {
            None
        }
    }

    pub fn to_raw(&self) -> RawPoly {
        let mut raw = RawPoly::zero(self.model);
        for (m, c) in &self.terms {
            raw = raw
                .add(&RawPoly::monomial(self.model, m.clone(), c.to_field()))
                .expect("same model");
        }
        raw
    }

    fn check_model(&self, rhs: &PolyElem) -> Result<()> {
        if self.model == rhs.model {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                left: self.model,
                right: rhs.model,
            })
        }
    }

    /// Exact sum; members are closed under addition.
    pub fn add(&self, rhs: &PolyElem) -> Result<PolyElem> {
        self.check_model(rhs)?;
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.remove(m) {
                Some(old) => {
                    let sum = old.add(c)?;
                    if !sum.is_zero() {
                        terms.insert(m.clone(), sum);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(PolyElem::from_parts_unchecked(self.model, terms))
    }

    /// Exact product; members are closed under multiplication since ℤ is
    /// a subring of every coefficient domain.
    pub fn mul(&self, rhs: &PolyElem) -> Result<PolyElem> {
        self.check_model(rhs)?;
        let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ml, cl) in &self.terms {
            for (mr, cr) in &rhs.terms {
                let m = ml.mul(mr);
                let c = cl.mul(cr)?;
                match terms.remove(&m) {
                    Some(old) => {
                        let sum = old.add(&c)?;
                        if !sum.is_zero() {
                            terms.insert(m, sum);
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            terms.insert(m, c);
                        }
                    }
                }
            }
        }
        Ok(PolyElem::from_parts_unchecked(self.model, terms))
    }

    /// Partial subtraction on the cone: `self − rhs`, defined only when
    /// `rhs < self` (mirroring the guard of the subtraction axiom).
    pub fn sub(&self, rhs: &PolyElem) -> Result<PolyElem> {
        self.check_model(rhs)?;
        if self.compare(rhs)? != Ordering::Greater {
            return Err(Error::OutOfCone(format!(
                "subtrahend {rhs} is not smaller than {self}"
            )));
        }
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let old = terms
                .remove(m)
                .unwrap_or_else(|| Coeff::zero(self.model.coeff_domain()));
            let diff = old.sub(c)?;
            if !diff.is_zero() {
                terms.insert(m.clone(), diff);
            }
        }
        Ok(PolyElem::from_parts_unchecked(self.model, terms))
    }

    /// The model order: `x < y` iff `y − x` is positive under the model's
    /// ordering rule, decided from the sign of the coefficient at the
    /// glex-greatest monomial where the two elements differ.
    pub fn compare(&self, rhs: &PolyElem) -> Result<Ordering> {
        self.check_model(rhs)?;
        let mut left = self.terms.iter().rev().peekable();
        let mut right = rhs.terms.iter().rev().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => return Ok(Ordering::Equal),
                (Some((_, c)), None) => {
                    return Ok(if c.sign() == Sign::Positive {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    })
                }
                (None, Some((_, c))) => {
                    return Ok(if c.sign() == Sign::Positive {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    })
                }
                (Some((ml, cl)), Some((mr, cr))) => match ml.cmp(mr) {
                    Ordering::Greater => {
                        if cl.sign() == Sign::Positive {
                            return Ok(Ordering::Greater);
                        }
                        return Ok(Ordering::Less);
                    }
                    Ordering::Less => {
                        if cr.sign() == Sign::Positive {
                            return Ok(Ordering::Less);
                        }
                        return Ok(Ordering::Greater);
                    }
                    Ordering::Equal => {
                        let diff = cl.sub(cr)?;
                        match diff.sign() {
                            Sign::Positive => return Ok(Ordering::Greater),
                            Sign::Negative => return Ok(Ordering::Less),
                            Sign::Zero => {
                                left.next();
                                right.next();
                            }
                        }
                    }
                },
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero()
    }

    /// `⌊x/2⌋`: halves every non-free coefficient exactly and floor-halves
    /// the integer free term. Only available where the signature has the
    /// operation (every model except ℤ[X]).
    pub fn half_floor(&self) -> Result<PolyElem> {
        if !self.model.has_half() {
            return Err(Error::Unsupported {
                op: "half_floor",
                model: self.model,
            });
        }
        let domain = self.model.coeff_domain();
        let free_mono = Monomial::one(self.model.var_count());
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let halved = if *m == free_mono {
                let f = c.as_int().expect("member free term is an integer");
                Coeff::from_int(domain, floor_half_int(&f))
            } else {
                c.half_exact().expect("coefficient domain contains 1/2")
            };
            if !halved.is_zero() {
                terms.insert(m.clone(), halved);
            }
        }
        Ok(PolyElem::from_parts_unchecked(self.model, terms))
    }

    /// Parity with witness. Where ⌊·/2⌋ exists the witness is `⌊x/2⌋`
    /// itself; in ℤ[X] parity is decided coefficientwise and elements
    /// like X+1 are neither even nor odd.
    pub fn parity(&self) -> Parity {
        if self.model.has_half() {
            let half = self.half_floor().expect("has_half checked");
            let two = PolyElem::numeral(2, self.model).expect("2 is a numeral");
            let doubled = two.mul(&half).expect("same model");
            if doubled == *self {
                return Parity::Even(half);
            }
            let plus_one = doubled
                .add(&PolyElem::one(self.model))
                .expect("same model");
            if plus_one == *self {
                return Parity::Odd(half);
            }
            return Parity::Neither;
        }
        // ℤ[X]: even iff every coefficient is even; odd iff the free term
        // is odd and every other coefficient is even.
        let free_mono = Monomial::one(self.model.var_count());
        let mut half_terms = BTreeMap::new();
        let mut free_odd = false;
        for (m, c) in &self.terms {
            match c.half_exact() {
                Some(h) => {
                    half_terms.insert(m.clone(), h);
                }
                None if *m == free_mono => {
                    free_odd = true;
                    let f = c.as_int().expect("ℤ[X] coefficients are integers");
                    let h = Coeff::from_int(self.model.coeff_domain(), floor_half_int(&f));
                    if !h.is_zero() {
                        half_terms.insert(m.clone(), h);
                    }
                }
                None => return Parity::Neither,
            }
        }
        let witness = PolyElem::from_parts_unchecked(self.model, half_terms);
        if free_odd {
            Parity::Odd(witness)
        } else {
            Parity::Even(witness)
        }
    }

    /// Multiplies by 2^k, when the result stays in the cone.
    pub fn scale_pow2(&self, k: i64) -> Option<PolyElem> {
        use super::FieldCoeff;
        self.to_raw()
            .scale(&FieldCoeff::from_int(1).scale_pow2(k))
            .to_member()
            .ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FieldCoeff;
    use crate::arith::Rational;

    fn var_x(model: ModelId) -> PolyElem {
        PolyElem::variable(model, Var::X).unwrap()
    }

    fn sqrt3_x() -> PolyElem {
        RawPoly::radical(ModelId::R3X)
            .unwrap()
            .mul(&RawPoly::variable(ModelId::R3X, Var::X).unwrap())
            .unwrap()
            .to_member()
            .unwrap()
    }

    #[test]
    fn numeral_examples() {
        let two = PolyElem::numeral(2, ModelId::ZX).unwrap();
        assert_eq!(two.free_term(), BigInt::from(2));
        assert!(PolyElem::numeral(0, ModelId::DyXyz).unwrap().is_zero());
        assert_eq!(
            PolyElem::numeral(16, ModelId::Int).unwrap().as_constant(),
            Some(BigInt::from(16))
        );
        assert!(matches!(
            PolyElem::numeral(-1, ModelId::Int),
            Err(Error::OutOfCone(_))
        ));
    }

    #[test]
    fn product_of_radical_terms() {
        // √3X · √3X = 3X²
        let p = sqrt3_x().mul(&sqrt3_x()).unwrap();
        let expected = RawPoly::from_int(ModelId::R3X, 3)
            .mul(&RawPoly::variable(ModelId::R3X, Var::X).unwrap().pow(2))
            .unwrap()
            .to_member()
            .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn ordering_witnesses() {
        // X < √3X < 2X in R3_X
        let x = var_x(ModelId::R3X);
        let s3x = sqrt3_x();
        let two_x = PolyElem::numeral(2, ModelId::R3X)
            .unwrap()
            .mul(&x)
            .unwrap();
        assert_eq!(x.compare(&s3x).unwrap(), Ordering::Less);
        assert_eq!(s3x.compare(&two_x).unwrap(), Ordering::Less);
        assert_eq!(x.compare(&x).unwrap(), Ordering::Equal);

        // XY − Z > 0 in DY_XYZ
        let m = ModelId::DyXyz;
        let xy_minus_z = PolyElem::variable(m, Var::X)
            .unwrap()
            .mul(&PolyElem::variable(m, Var::Y).unwrap())
            .unwrap()
            .sub(&PolyElem::variable(m, Var::Z).unwrap())
            .unwrap();
        assert_eq!(
            xy_minus_z.compare(&PolyElem::zero(m)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn subtraction_is_partial() {
        let x = var_x(ModelId::ZX);
        let xp1 = x.add(&PolyElem::one(ModelId::ZX)).unwrap();
        assert_eq!(xp1.sub(&x).unwrap(), PolyElem::one(ModelId::ZX));
        assert!(matches!(x.sub(&xp1), Err(Error::OutOfCone(_))));

        // √3X − X = (√3−1)X, defined because X < √3X
        let s3x = sqrt3_x();
        let xr = var_x(ModelId::R3X);
        let diff = s3x.sub(&xr).unwrap();
        assert_eq!(diff.add(&xr).unwrap(), s3x);
    }

    #[test]
    fn half_floor_and_parity() {
        // half_floor(X+1) = (1/2)X in R3_X, and X+1 = 2·(1/2)X + 1 is odd
        let xp1 = var_x(ModelId::R3X).add(&PolyElem::one(ModelId::R3X)).unwrap();
        let h = xp1.half_floor().unwrap();
        let half_x = RawPoly::variable(ModelId::R3X, Var::X)
            .unwrap()
            .scale(&FieldCoeff::from_rational(Rational::new(1.into(), 2.into())))
            .to_member()
            .unwrap();
        assert_eq!(h, half_x);
        assert_eq!(xp1.parity(), Parity::Odd(half_x));

        // half_floor(2X) = X, so 2X is even
        let two_x = PolyElem::numeral(2, ModelId::R3X)
            .unwrap()
            .mul(&var_x(ModelId::R3X))
            .unwrap();
        assert_eq!(two_x.parity(), Parity::Even(var_x(ModelId::R3X)));

        // half_floor is unavailable in ℤ[X]
        assert!(matches!(
            var_x(ModelId::ZX).half_floor(),
            Err(Error::Unsupported { .. })
        ));

        // X+1, …, X+5 are neither even nor odd in ℤ[X]
        for k in 1..=5 {
            let p = var_x(ModelId::ZX)
                .add(&PolyElem::numeral(k, ModelId::ZX).unwrap())
                .unwrap();
            assert_eq!(p.parity(), Parity::Neither, "X+{k}");
        }

        // parity(6) = Even(3) in INT
        let six = PolyElem::numeral(6, ModelId::Int).unwrap();
        assert_eq!(
            six.parity(),
            Parity::Even(PolyElem::numeral(3, ModelId::Int).unwrap())
        );

        // parity(0) = Even(0)
        assert_eq!(
            PolyElem::zero(ModelId::R3X).parity(),
            Parity::Even(PolyElem::zero(ModelId::R3X))
        );
    }

    #[test]
    fn trivariate_half_floor() {
        // half_floor(XY−Z) = (1/2)XY − (1/2)Z
        let m = ModelId::DyXyz;
        let xy = PolyElem::variable(m, Var::X)
            .unwrap()
            .mul(&PolyElem::variable(m, Var::Y).unwrap())
            .unwrap();
        let p = xy.sub(&PolyElem::variable(m, Var::Z).unwrap()).unwrap();
        let h = p.half_floor().unwrap();
        let two = PolyElem::numeral(2, m).unwrap();
        assert_eq!(two.mul(&h).unwrap(), p);
        assert!(p.parity().is_even());
    }

    #[test]
    fn model_mismatch() {
        let a = var_x(ModelId::ZX);
        let b = var_x(ModelId::R3X);
        assert!(matches!(a.add(&b), Err(Error::ModelMismatch { .. })));
    }
}
