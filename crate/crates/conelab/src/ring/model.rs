//! The model catalog: five carriers, each fully determined by its id.

use std::fmt;

use super::Var;

/// Identifier of one of the five carriers.
///
/// * `Int` — the standard non-negative integers.
/// * `ZX` — the positive cone of ℤ[X], ordered by the leading coefficient.
/// * `R3X` — polynomials in X with free term in ℤ and all other
///   coefficients in ℤ[1/2][√3].
/// * `Q2X` — polynomials in X with free term in ℤ and all other
///   coefficients in ℚ(√2).
/// * `DyXyz` — polynomials in X, Y, Z with free term in ℤ and all other
///   coefficients dyadic, ordered by the max-lex leading coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelId {
    Int,
    ZX,
    R3X,
    Q2X,
    DyXyz,
}

/// Coefficient domain of a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    /// ℤ
    Int,
    /// ℤ[1/2]
    Dyadic,
    /// ℤ[1/2][√3]
    DyadicSqrt3,
    /// ℚ(√2)
    RationalSqrt2,
}

/// How the positive cone decides `x > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderingRule {
    /// Plain integer order.
    Integer,
    /// Sign of the coefficient of the highest degree.
    LeadingCoefficient,
    /// Sign of the coefficient at the lex-greatest exponent triple among
    /// the terms of maximal total degree.
    MaxLexLeading,
}

/// Catalog entry; every field follows from the id.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelDescriptor {
    pub id: ModelId,
    pub var_count: usize,
    pub coeff_domain: CoeffDomain,
    pub ordering: OrderingRule,
    /// Whether ⌊·/2⌋ is part of the signature.
    pub has_half: bool,
    /// Whether κ, μ, ν have a total interpretation.
    pub has_kmn: bool,
}

impl ModelId {
    pub const ALL: [ModelId; 5] = [
        ModelId::Int,
        ModelId::ZX,
        ModelId::R3X,
        ModelId::Q2X,
        ModelId::DyXyz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelId::Int => "INT",
            ModelId::ZX => "Z_X",
            ModelId::R3X => "R3_X",
            ModelId::Q2X => "Q2_X",
            ModelId::DyXyz => "DY_XYZ",
        }
    }

    pub fn from_name(name: &str) -> Option<ModelId> {
        ModelId::ALL.into_iter().find(|m| m.name() == name)
    }

    pub fn var_count(self) -> usize {
        match self {
            ModelId::Int => 0,
            ModelId::ZX | ModelId::R3X | ModelId::Q2X => 1,
            ModelId::DyXyz => 3,
        }
    }

    pub fn vars(self) -> &'static [Var] {
        &Var::ALL[..self.var_count()]
    }

    pub fn coeff_domain(self) -> CoeffDomain {
        match self {
            ModelId::Int | ModelId::ZX => CoeffDomain::Int,
            ModelId::R3X => CoeffDomain::DyadicSqrt3,
            ModelId::Q2X => CoeffDomain::RationalSqrt2,
            ModelId::DyXyz => CoeffDomain::Dyadic,
        }
    }

    pub fn ordering(self) -> OrderingRule {
        match self {
            ModelId::Int => OrderingRule::Integer,
            ModelId::ZX | ModelId::R3X | ModelId::Q2X => OrderingRule::LeadingCoefficient,
            ModelId::DyXyz => OrderingRule::MaxLexLeading,
        }
    }

    /// ⌊·/2⌋ exists wherever the coefficient domain contains 1/2 (and in
    /// the standard model); ℤ[X] has no such operation.
    pub fn has_half(self) -> bool {
        !matches!(self, ModelId::ZX)
    }

    pub fn has_kmn(self) -> bool {
        matches!(self, ModelId::Int)
    }

    /// The radicand of the coefficient domain, if it has one.
    pub fn radicand(self) -> Option<i64> {
        match self {
            ModelId::R3X => Some(3),
            ModelId::Q2X => Some(2),
            _ => None,
        }
    }

    pub fn descriptor(self) -> ModelDescriptor {
        ModelDescriptor {
            id: self,
            var_count: self.var_count(),
            coeff_domain: self.coeff_domain(),
            ordering: self.ordering(),
            has_half: self.has_half(),
            has_kmn: self.has_kmn(),
        }
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for m in ModelId::ALL {
            assert_eq!(ModelId::from_name(m.name()), Some(m));
        }
        assert_eq!(ModelId::from_name("nope"), None);
    }

    #[test]
    fn catalog_is_consistent() {
        assert!(ModelId::Int.has_half());
        assert!(!ModelId::ZX.has_half());
        assert!(ModelId::Int.has_kmn());
        assert!(!ModelId::Q2X.has_kmn());
        assert_eq!(ModelId::DyXyz.var_count(), 3);
        assert_eq!(ModelId::DyXyz.descriptor().ordering, OrderingRule::MaxLexLeading);
        assert_eq!(ModelId::R3X.radicand(), Some(3));
    }
}
