//! The four constrained polynomial rings plus the standard integers,
//! carrying the full signature {0, 1, +, ·, <, −, ⌊·/2⌋, κ, μ, ν},
//! parity, divisibility and the divisor-theoretic power-of-two test.

mod coeff;
mod display;
mod divisor;
mod field;
mod kmn;
mod model;
mod monomial;
mod poly;
mod raw;

pub use coeff::Coeff;
pub use divisor::{divides, divisors_gt1, pt_check};
pub use field::FieldCoeff;
pub use kmn::{kappa_mu_nu, KmnDecomposition, KmnOutcome};
pub use model::{CoeffDomain, ModelDescriptor, ModelId, OrderingRule};
pub use monomial::{Monomial, Var};
pub use poly::{Parity, PolyElem};
pub use raw::RawPoly;
