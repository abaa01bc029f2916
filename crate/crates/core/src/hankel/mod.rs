//! Structured symbolic matrices (Hankel, triangular, scaled), Wronskians and
//! spans of minors.

mod family;
mod matrix;
mod minors;

pub use family::{FamilyParams, FamilyRegistry, MatrixFamily, StructuredMatrixSpec};
pub use matrix::SymbolicMatrix;
pub use minors::{
    determinant, enumerate_minors, hankel_wronskians, minor, minor_span, span_of_minors, wronskian,
    GradedSpan, MinorEngine, MinorSelector,
};
