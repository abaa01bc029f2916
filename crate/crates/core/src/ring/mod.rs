//! Sparse multivariate polynomials over `Q` with a built-in derivation.
//!
//! Variables are either differential (`x_i^(j)`, derivative `x_i^(j+1)`) or
//! auxiliary symbols used by the substitution checks: `xi_m`, `alpha_{m,j}`
//! (constants), `E_m` (with `E_m' = xi_m E_m`) and `y^(k)` (with
//! `(y^(k))' = y^(k+1)`).

mod monomial;
mod parse;
mod polynomial;
mod variable;

pub use monomial::Monomial;
pub use parse::parse;
pub use polynomial::Polynomial;
pub use variable::{DerivationRule, Variable};

/// The only scalar type used anywhere in the crate.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = num_bigint::BigInt::from(1u32);
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return rat(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}
