//! Exact dense linear algebra over `Q` on monomial-indexed coefficient matrices.
//!
//! Constraint systems and spans are usually block diagonal once their
//! columns are grouped by the graded piece they belong to, so the sparse
//! entry points split rows into connected blocks and run dense elimination
//! on each block separately.

mod index;
mod matrix;
mod span;
mod sparse;

pub use index::MonomialIndex;
pub use matrix::{coeff_matrix, kernel_basis, rank, row_reduce, RationalMatrix};
pub use span::{span_equal, Span};
pub use sparse::{blocks, kernel_basis_sparse, rref_sparse, Block, SparseRow};
