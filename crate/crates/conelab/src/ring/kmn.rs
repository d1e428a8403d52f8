//! The reduced-fraction decomposition: κ, μ, ν with m = κ·μ, n = κ·ν and
//! μ or ν odd.

use super::{divides, divisors_gt1, ModelId, PolyElem};
use crate::{Error, Result};

/// A decomposition m = κ·μ, n = κ·ν with μ or ν odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KmnDecomposition {
    pub kappa: PolyElem,
    pub mu: PolyElem,
    pub nu: PolyElem,
}

/// Search result; `NotFound` carries the candidate κ list that was tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KmnOutcome {
    Found(KmnDecomposition),
    NotFound { candidates: Vec<PolyElem> },
}

/// Computes the decomposition for positive m, n.
///
/// In INT, κ is fixed to the pure 2-power rule `κ = 2^min(v₂(m), v₂(n))`,
/// which always leaves one cofactor odd. In the polynomial models κ is
/// searched over the common divisors delivered by the divisor
/// characterization (plus 1), preferring maximal 2-power content; if no
/// candidate yields an odd μ or ν the search reports the candidates it
/// tried.
pub fn kappa_mu_nu(m: &PolyElem, n: &PolyElem) -> Result<KmnOutcome> {
    if m.model() != n.model() {
        return Err(Error::ModelMismatch {
            left: m.model(),
            right: n.model(),
        });
    }
    if !m.is_positive() || !n.is_positive() {
        return Err(Error::OutOfCone(format!("κμν of ({m}, {n})")));
    }
    let model = m.model();
    if model == ModelId::Int {
        let a = m.as_constant().expect("INT elements are constants");
        let b = n.as_constant().expect("INT elements are constants");
        let k = a
            .trailing_zeros()
            .expect("positive")
            .min(b.trailing_zeros().expect("positive"));
        let kappa = PolyElem::numeral(num_bigint::BigInt::from(1) << k, model)?;
        let mu = PolyElem::numeral(a >> k, model)?;
        let nu = PolyElem::numeral(b >> k, model)?;
        debug_assert!(mu.parity().is_odd() || nu.parity().is_odd());
        return Ok(KmnOutcome::Found(KmnDecomposition { kappa, mu, nu }));
    }

    let mut candidates: Vec<PolyElem> = divisors_gt1(m)?
        .into_iter()
        .filter(|k| matches!(divides(k, n), Ok(Some(_))))
        .collect();
    candidates.sort_by_key(|k| std::cmp::Reverse(content_v2(k)));
    candidates.push(PolyElem::one(model));

    for kappa in &candidates {
        let mu = divides(kappa, m)
            .expect("same model")
            .expect("κ divides m by construction");
        let nu = divides(kappa, n)
            .expect("same model")
            .expect("κ divides n by construction");
        if mu.parity().is_odd() || nu.parity().is_odd() {
            return Ok(KmnOutcome::Found(KmnDecomposition {
                kappa: kappa.clone(),
                mu,
                nu,
            }));
        }
    }
    Ok(KmnOutcome::NotFound { candidates })
}

/// 2-adic content: the largest k with x/2^k still in the coefficient
/// lattice, computed as the minimal coefficient valuation.
fn content_v2(x: &PolyElem) -> i64 {
    x.terms()
        .values()
        .filter_map(|c| c.two_adic_valuation())
        .min()
        .unwrap_or(0)
}
