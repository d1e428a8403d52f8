use thiserror::Error;

use crate::ring::ModelId;

/// Errors shared by the arithmetic and ring layers.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent must be non-negative, got {0}")]
    NegativeExponent(i64),
    #[error("mixed coefficient domains")]
    DomainMismatch,
    #[error("model mismatch: {left} vs {right}")]
    ModelMismatch { left: ModelId, right: ModelId },
    /// Partial operations on the cone (subtraction, numerals, κμν, PT)
    /// reject arguments outside their guard.
    #[error("outside the positive cone: {0}")]
    OutOfCone(String),
    #[error("operation `{op}` is not available in model {model}")]
    Unsupported { op: &'static str, model: ModelId },
    #[error("division by zero")]
    DivisionByZero,
    /// Divisor enumeration refuses shapes outside its characterization
    /// rather than returning an incomplete answer.
    #[error("unsupported element shape: {0}")]
    UnsupportedShape(String),
    #[error("not a member of {model}: {reason}")]
    NotMember { model: ModelId, reason: String },
    #[error("unknown variable `{name}` in model {model}")]
    UnknownVariable { name: String, model: ModelId },
}

pub type Result<T> = std::result::Result<T, Error>;
