//! Exponent vectors ordered by graded lex.

use std::cmp::Ordering;

/// Variables available across the polynomial models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn name(self) -> char {
        match self {
            Var::X => 'X',
            Var::Y => 'Y',
            Var::Z => 'Z',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'X' => Some(Var::X),
            'Y' => Some(Var::Y),
            'Z' => Some(Var::Z),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// A monomial as a fixed-length exponent vector; the length is the
/// variable count of the owning model (0 for the integer model).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: Var) -> Self {
        debug_assert!(v.index() < nvars);
        let mut exps = vec![0; nvars];
        exps[v.index()] = 1;
        Monomial(exps)
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise divisibility.
    pub fn divides(&self, rhs: &Monomial) -> bool {
        self.0.len() == rhs.0.len() && self.0.iter().zip(&rhs.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, rhs: &Monomial) -> Option<Monomial> {
        if rhs.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    /// Componentwise gcd.
    pub fn gcd(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Every monomial dividing this one, in ascending graded-lex order.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial(vec![0; self.0.len()])];
        for (i, &e) in self.0.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for m in &out {
                for k in 0..=e {
                    let mut exps = m.0.clone();
                    exps[i] = k;
                    next.push(Monomial(exps));
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

/// Graded lex: total degree first, then the exponent tuple
/// lexicographically. The glex maximum of a support set is exactly the
/// "ordering monomial" of every model: the highest degree for the
/// univariate rings, and the lex-greatest index among the terms of
/// maximal total degree for the trivariate ring.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
