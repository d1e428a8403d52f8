//! Exact arithmetic on the positive cones of ordered polynomial rings.
//!
//! The crate implements five carriers of discretely ordered semiring
//! arithmetic — the standard non-negative integers plus four polynomial
//! cones with constrained coefficient domains — together with the
//! operations `{0, 1, +, ·, <, −, ⌊·/2⌋, κ, μ, ν}`, parity, divisibility
//! and a divisor-theoretic power-of-two test. On top of the rings sit a
//! property-based axiom checker with deterministic sampling ([`lab`]) and
//! a solver for the "all of ab−c, bc−a, ca−b are powers of two" problem
//! over the integers ([`imo`]).
//!
//! Everything is computed in exact arithmetic; no floating point is used
//! anywhere, including sign decisions for quadratic irrationals.

pub mod arith;
pub mod imo;
pub mod lab;
pub mod ring;

mod error;

pub use error::{Error, Result};
