//! Generators of the arc ideal of the double point `I_n = <x_i x_j>`.
//!
//! With `x_i(t) = sum_j x_i^(j) t^j`, the generator for `(i, j, l)` is the
//! coefficient of `t^l` in `x_i(t) x_j(t)`, i.e. `sum_{s<=l} x_i^(s) x_j^(l-s)`.

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcGeneratorKey {
    pub i: u32,
    pub j: u32,
    pub ell: u32,
}

impl ArcGeneratorKey {
    pub fn new(i: u32, j: u32, ell: u32) -> Self {
        ArcGeneratorKey { i, j, ell }
    }

    pub fn validate(&self, n: u32) -> Result<()> {
        if self.i == 0 || self.i > self.j || self.j > n {
            return Err(Error::IndexOutOfRange(format!(
                "generator families ({}, {}) must satisfy 1 <= i <= j <= {n}",
                self.i, self.j
            )));
        }
        Ok(())
    }
}

/// Coefficient of `t^l` in `x_i(t) x_j(t)`.
pub fn arc_generator(n: u32, key: ArcGeneratorKey) -> Result<Polynomial> {
    key.validate(n)?;
    let one = Rational::from_integer(1.into());
    Ok(Polynomial::from_terms((0..=key.ell).map(|s| {
        let m = Monomial::from_powers([
            (crate::Variable::x(key.i, s), 1),
            (crate::Variable::x(key.j, key.ell - s), 1),
        ]);
        (m, one.clone())
    })))
}

/// All keys with `i <= j` and `l <= max_ell`, ordered by `l`, then `i`, then `j`.
pub fn generator_keys(n: u32, max_ell: u32) -> Vec<ArcGeneratorKey> {
    let mut keys = Vec::new();
    for ell in 0..=max_ell {
        for i in 1..=n {
            for j in i..=n {
                keys.push(ArcGeneratorKey::new(i, j, ell));
            }
        }
    }
    keys
}

pub fn arc_generators_up_to(n: u32, max_ell: u32) -> Vec<Polynomial> {
    generator_keys(n, max_ell)
        .into_iter()
        .map(|k| arc_generator(n, k).expect("keys are valid"))
        .collect()
}
