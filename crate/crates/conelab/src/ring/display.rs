//! Rendering of cone elements in the term grammar accepted by the CLI
//! parser, so every printed element can be read back.

use std::fmt;

use num_traits::{One, Signed};

use super::{ModelId, Monomial, PolyElem};
use crate::arith::{Rational, Sign};

fn monomial_body(m: &Monomial, model: ModelId) -> String {
    let mut pieces = Vec::new();
    for (var, &e) in model.vars().iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => pieces.push(var.name().to_string()),
            _ => pieces.push(format!("{}^{}", var.name(), e)),
        }
    }
    pieces.join("*")
}

struct Part {
    negative: bool,
    body: String,
}

fn part(coeff: &Rational, radical: Option<&'static str>, mono: &str) -> Part {
    let negative = coeff.is_negative();
    let mag = coeff.abs();
    let mut pieces = Vec::new();
    if !mag.is_one() || (radical.is_none() && mono.is_empty()) {
        pieces.push(mag.to_string());
    }
    if let Some(r) = radical {
        pieces.push(r.to_string());
    }
    if !mono.is_empty() {
        pieces.push(mono.to_string());
    }
    Part {
        negative,
        body: pieces.join("*"),
    }
}

impl fmt::Display for PolyElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let radical_name = match self.model().radicand() {
            Some(2) => "sqrt2",
            Some(3) => "sqrt3",
            _ => "",
        };
        let mut parts: Vec<Part> = Vec::new();
        for (m, c) in self.terms().iter().rev() {
            let fc = c.to_field();
            let mono = monomial_body(m, self.model());
            if !fc.a.numer().is_zero() {
                parts.push(part(&fc.a, None, &mono));
            }
            if !fc.b.numer().is_zero() {
                parts.push(part(&fc.b, Some(radical_name), &mono));
            }
        }
        // The grammar has no unary minus, so a positive part must lead.
        // Members are non-negative, hence the leading coefficient always
        // contributes one; rotate it to the front if necessary.
        if parts[0].negative {
            let pos = parts
                .iter()
                .position(|p| !p.negative)
                .expect("a member has a positive leading part");
            parts.swap(0, pos);
        }
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                debug_assert!(!p.negative);
                f.write_str(&p.body)?;
            } else if p.negative {
                write!(f, " - {}", p.body)?;
            } else {
                write!(f, " + {}", p.body)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldCoeff, RawPoly, Var};

    #[test]
    fn rendering_examples() {
        let m = ModelId::R3X;
        let x = RawPoly::variable(m, Var::X).unwrap();
        let s3x = RawPoly::radical(m).unwrap().mul(&x).unwrap();
        assert_eq!(s3x.to_member().unwrap().to_string(), "sqrt3*X");

        let p = RawPoly::from_int(m, 3)
            .mul(&x.pow(2))
            .unwrap()
            .to_member()
            .unwrap();
        assert_eq!(p.to_string(), "3*X^2");

        // (√3 − 1)X + 1 leads with the positive radical part
        let q = s3x
            .sub(&x)
            .unwrap()
            .add(&RawPoly::from_int(m, 1))
            .unwrap()
            .to_member()
            .unwrap();
        assert_eq!(q.to_string(), "sqrt3*X - X + 1");

        let half_x = x
            .scale(&FieldCoeff::from_rational(Rational::new(1.into(), 2.into())))
            .to_member()
            .unwrap();
        assert_eq!(half_x.to_string(), "1/2*X");

        assert_eq!(PolyElem::zero(m).to_string(), "0");
        assert_eq!(PolyElem::numeral(7, ModelId::Int).unwrap().to_string(), "7");
    }

    #[test]
    fn trivariate_rendering() {
        let m = ModelId::DyXyz;
        let xy = RawPoly::variable(m, Var::X)
            .unwrap()
            .mul(&RawPoly::variable(m, Var::Y).unwrap())
            .unwrap();
        let p = xy
            .sub(&RawPoly::variable(m, Var::Z).unwrap())
            .unwrap()
            .to_member()
            .unwrap();
        assert_eq!(p.to_string(), "X*Y - Z");
    }
}
