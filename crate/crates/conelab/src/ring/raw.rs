//! Raw polynomials over the coefficient fraction field. Raw values need
//! not satisfy the membership constraints; [`RawPoly::to_member`] checks
//! them and produces a cone element.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Coeff, FieldCoeff, ModelId, Monomial, PolyElem, Var};
use crate::arith::{Rational, Sign};
use crate::{Error, Result};

/// A polynomial over ℚ or ℚ(√d), tagged with its model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPoly {
    model: ModelId,
    terms: BTreeMap<Monomial, FieldCoeff>,
}

impl RawPoly {
    pub fn zero(model: ModelId) -> Self {
        RawPoly {
            model,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(model: ModelId, c: FieldCoeff) -> Self {
        let mut p = RawPoly::zero(model);
        p.insert(Monomial::one(model.var_count()), c);
        p
    }

    pub fn from_int(model: ModelId, v: i64) -> Self {
        RawPoly::constant(model, FieldCoeff::from_int(v))
    }

    pub fn from_rational(model: ModelId, r: Rational) -> Self {
        RawPoly::constant(model, FieldCoeff::from_rational(r))
    }

    /// The radical √d of the model's coefficient domain, as a constant.
    pub fn radical(model: ModelId) -> Result<Self> {
        match model.radicand() {
            Some(_) => Ok(RawPoly::constant(model, FieldCoeff::radical())),
            None => Err(Error::Unsupported {
                op: "radical",
                model,
            }),
        }
    }

    pub fn variable(model: ModelId, v: Var) -> Result<Self> {
        if v.index() >= model.var_count() {
            return Err(Error::UnknownVariable {
                name: v.name().to_string(),
                model,
            });
        }
        let mut p = RawPoly::zero(model);
        p.insert(
            Monomial::var(model.var_count(), v),
            FieldCoeff::one(),
        );
        Ok(p)
    }

    pub fn monomial(model: ModelId, m: Monomial, c: FieldCoeff) -> Self {
        let mut p = RawPoly::zero(model);
        p.insert(m, c);
        p
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldCoeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn radicand(&self) -> i64 {
        self.model.radicand().unwrap_or(0)
    }

    fn insert(&mut self, m: Monomial, c: FieldCoeff) {
        if !c.is_zero() {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Monomial, c: FieldCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => self.insert(m, old.add(&c)),
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_model(&self, rhs: &RawPoly) -> Result<()> {
        if self.model == rhs.model {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                left: self.model,
                right: rhs.model,
            })
        }
    }

    pub fn add(&self, rhs: &RawPoly) -> Result<RawPoly> {
        self.check_model(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &RawPoly) -> Result<RawPoly> {
        self.check_model(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> RawPoly {
        RawPoly {
            model: self.model,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &RawPoly) -> Result<RawPoly> {
        self.check_model(rhs)?;
        let d = self.radicand();
        let mut out = RawPoly::zero(self.model);
        for (ml, cl) in &self.terms {
            for (mr, cr) in &rhs.terms {
                out.add_term(ml.mul(mr), cl.mul(cr, d));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> RawPoly {
        let mut out = RawPoly::constant(self.model, FieldCoeff::one());
        for _ in 0..e {
            out = out.mul(self).expect("same model");
        }
        out
    }

    pub fn scale(&self, c: &FieldCoeff) -> RawPoly {
        let d = self.radicand();
        let mut out = RawPoly::zero(self.model);
        for (m, v) in &self.terms {
            out.insert(m.clone(), v.mul(c, d));
        }
        out
    }

    /// The glex-leading term.
    pub fn leading(&self) -> Option<(&Monomial, &FieldCoeff)> {
        self.terms.iter().next_back()
    }

    pub fn free_coeff(&self) -> FieldCoeff {
        self.terms
            .get(&Monomial::one(self.model.var_count()))
            .cloned()
            .unwrap_or_else(FieldCoeff::zero)
    }

    /// Sign under the model's ordering rule: the sign of the coefficient
    /// at the glex-greatest monomial of the support.
    pub fn sign(&self) -> Sign {
        match self.leading() {
            None => Sign::Zero,
            Some((_, c)) => c.sign(self.radicand()),
        }
    }

    /// Why this raw polynomial is not a member, or `None` if it is one:
    /// all coefficients in the coefficient domain, the free term in ℤ,
    /// and non-negative under the model order.
    pub fn membership_violation(&self) -> Option<String> {
        let domain = self.model.coeff_domain();
        let free_mono = Monomial::one(self.model.var_count());
        for (m, c) in &self.terms {
            if *m == free_mono {
                if c.as_int().is_none() {
                    return Some(format!("free term {} is not an integer", describe(c)));
                }
            } else if Coeff::from_field(domain, c).is_none() {
                return Some(format!(
                    "coefficient {} lies outside the coefficient domain",
                    describe(c)
                ));
            }
        }
        if self.sign() == Sign::Negative {
            return Some("negative under the model order".to_string());
        }
        None
    }

    pub fn is_member(&self) -> bool {
        self.membership_violation().is_none()
    }

    /// Checks membership and produces the cone element.
    pub fn to_member(&self) -> Result<PolyElem> {
        if let Some(reason) = self.membership_violation() {
            return Err(Error::NotMember {
                model: self.model,
                reason,
            });
        }
        let domain = self.model.coeff_domain();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let coeff = Coeff::from_field(domain, c)
                    .expect("membership checked");
                (m.clone(), coeff)
            })
            .collect();
        Ok(PolyElem::from_parts_unchecked(self.model, terms))
    }

    /// Exact division by a nonzero raw polynomial: `Some(q)` iff
    /// `d·q == self` with zero remainder. Single-divisor long division
    /// under graded lex; if the divisor's leading monomial ever fails to
    /// divide the remainder's, the division is not exact.
    pub fn div_exact(&self, divisor: &RawPoly) -> Option<RawPoly> {
        debug_assert_eq!(self.model, divisor.model);
        debug_assert!(!divisor.is_zero());
        let d = self.radicand();
        let (dm, dc) = divisor.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = RawPoly::zero(self.model);
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let qc = rc.div(dc, d);
            let mut piece = RawPoly::zero(self.model);
            piece.insert(qm.clone(), qc.clone());
            quot.insert(qm, qc);
            rem = rem.sub(&piece.mul(divisor).expect("same model")).expect("same model");
        }
        Some(quot)
    }
}

fn describe(c: &FieldCoeff) -> String {
    if c.b.is_zero() {
        format!("{}", c.a)
    } else {
        format!("{} + {}*sqrt(d)", c.a, c.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn x(model: ModelId) -> RawPoly {
        RawPoly::variable(model, Var::X).unwrap()
    }

    #[test]
    fn membership_rules() {
        // (1/2)X + 1 is a member of R3_X
        let half_x = x(ModelId::R3X).scale(&FieldCoeff::from_rational(Rational::new(
            1.into(),
            2.into(),
        )));
        let p = half_x.add(&RawPoly::from_int(ModelId::R3X, 1)).unwrap();
        assert!(p.is_member());

        // X + 1/2 is not: free term not an integer
        let q = x(ModelId::R3X)
            .add(&RawPoly::from_rational(
                ModelId::R3X,
                Rational::new(1.into(), 2.into()),
            ))
            .unwrap();
        assert!(q.membership_violation().unwrap().contains("free term"));

        // the constant √3 is not: free term √3 is not an integer
        let r = RawPoly::radical(ModelId::R3X).unwrap();
        assert!(!r.is_member());

        // 1/3 · X is not a member of R3_X (coefficient outside ℤ[1/2][√3])
        let third_x = x(ModelId::R3X).scale(&FieldCoeff::from_rational(Rational::new(
            1.into(),
            3.into(),
        )));
        assert!(third_x
            .membership_violation()
            .unwrap()
            .contains("coefficient"));
        // ... but it is one in Q2_X
        let third_x_q2 = x(ModelId::Q2X).scale(&FieldCoeff::from_rational(Rational::new(
            1.into(),
            3.into(),
        )));
        assert!(third_x_q2.is_member());
    }

    #[test]
    fn negative_leading_is_rejected() {
        let p = x(ModelId::ZX)
            .neg()
            .add(&RawPoly::from_int(ModelId::ZX, 5))
            .unwrap();
        // 5 − X < 0 under the leading-coefficient order
        assert_eq!(p.sign(), Sign::Negative);
        assert!(!p.is_member());
    }

    #[test]
    fn exact_division() {
        // (X² − 1) / (X − 1) = X + 1 over ℚ
        let model = ModelId::ZX;
        let x2m1 = x(model).pow(2).sub(&RawPoly::from_int(model, 1)).unwrap();
        let xm1 = x(model).sub(&RawPoly::from_int(model, 1)).unwrap();
        let q = x2m1.div_exact(&xm1).unwrap();
        assert_eq!(q, x(model).add(&RawPoly::from_int(model, 1)).unwrap());

        // X² + 1 is not divisible by X + 1
        let x2p1 = x(model).pow(2).add(&RawPoly::from_int(model, 1)).unwrap();
        let xp1 = x(model).add(&RawPoly::from_int(model, 1)).unwrap();
        assert_eq!(x2p1.div_exact(&xp1), None);
    }

    #[test]
    fn trivariate_leading_term() {
        // XY − Z: the max-degree term XY carries the ordering
        let model = ModelId::DyXyz;
        let xy = RawPoly::variable(model, Var::X)
            .unwrap()
            .mul(&RawPoly::variable(model, Var::Y).unwrap())
            .unwrap();
        let p = xy.sub(&RawPoly::variable(model, Var::Z).unwrap()).unwrap();
        let (m, c) = p.leading().unwrap();
        assert_eq!(m.exps(), &[1, 1, 0]);
        assert!(c.a.is_one());
        assert_eq!(p.sign(), Sign::Positive);
        assert!(p.is_member());
    }
}
