use thiserror::Error;

use crate::ring::Variable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("variable {variable} exceeds operator truncation order {max_order}")]
    OrderOverflow { variable: Variable, max_order: u32 },

    #[error("monomial {0} is not part of the ambient index")]
    MonomialOutsideIndex(String),

    #[error("spans are expressed over different monomial indices")]
    IndexMismatch,

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("expected a polynomial of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("matrix with {rows}x{cols} entries exceeds the supported minor size")]
    MatrixTooLarge { rows: usize, cols: usize },

    #[error("invalid minor selector: {0}")]
    InvalidSelector(String),

    #[error("unknown matrix family `{0}`")]
    UnknownFamily(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
