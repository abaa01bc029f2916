#![allow(dead_code)]

use arcinv::ring::{frac, Monomial, Polynomial, Variable};
use rand::Rng;

/// Random polynomial in `x_1..x_n` of orders `<= max_order`, with small
/// rational coefficients.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    n: u32,
    max_order: u32,
    max_terms: usize,
    max_degree: u32,
) -> Polynomial {
    let terms = rng.gen_range(0..=max_terms);
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let degree = rng.gen_range(0..=max_degree);
        let powers: Vec<(Variable, u32)> = (0..degree)
            .map(|_| {
                (
                    Variable::x(rng.gen_range(1..=n), rng.gen_range(0..=max_order)),
                    1,
                )
            })
            .collect();
        let c = frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        p = p + Polynomial::term(c, Monomial::from_powers(powers));
    }
    p
}

/// Random homogeneous polynomial of the given degree.
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    n: u32,
    max_order: u32,
    max_terms: usize,
    degree: u32,
) -> Polynomial {
    let mut p = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let powers: Vec<(Variable, u32)> = (0..degree)
            .map(|_| {
                (
                    Variable::x(rng.gen_range(1..=n), rng.gen_range(0..=max_order)),
                    1,
                )
            })
            .collect();
        let c = frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        p = p + Polynomial::term(c, Monomial::from_powers(powers));
    }
    p
}

/// Random combination of `basis` with integer coefficients in `-3..=3`.
pub fn random_combination<R: Rng>(rng: &mut R, basis: &[Polynomial]) -> Polynomial {
    basis.iter().fold(Polynomial::zero(), |acc, b| {
        acc + b.scale(&frac(rng.gen_range(-3..=3), 1))
    })
}
