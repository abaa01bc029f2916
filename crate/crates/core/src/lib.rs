//! Exact computation of Macaulay inverse systems for the arc ideal of a
//! double point.
//!
//! The arc ideal of `I_n = <x_i x_j>` lives in the ring of formal derivatives
//! `Q[x_i^(j)]`. This crate computes graded pieces of its inverse system by
//! exact kernel extraction, builds the Hankel / triangular / scaled matrices
//! whose minors span the same spaces, and runs cross-checks between the two
//! descriptions, including the truncated dimension count `(n+1)^(h+1)`.
//!
//! All arithmetic is over arbitrary precision rationals.

pub mod arcgen;
pub mod error;
pub mod hankel;
pub mod linalg;
pub mod pairing;
pub mod perp;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Monomial, Polynomial, Rational, Variable};
