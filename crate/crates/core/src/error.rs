use thiserror::Error;

/// Errors raised by the exact-arithmetic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division rule produced a zero scalar (alpha = {alpha}, beta = {beta})")]
    DivisionByZeroRule { alpha: String, beta: String },

    #[error("degree order violated: {0}")]
    DegreeOrder(String),

    #[error("invalid division rule: {0}")]
    InvalidRule(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("input polynomial must have degree at least 1")]
    ConstantInput,

    #[error("block placement overlaps an earlier placement at cell ({row}, {col})")]
    Overlap { row: usize, col: usize },

    #[error("block placement out of bounds: {0}")]
    OutOfBounds(String),

    #[error("index error: {0}")]
    Index(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("range error: {0}")]
    Range(String),

    #[error("sign variation sequence contains a zero entry at position {0}")]
    ZeroEntry(usize),

    #[error("matrix dimensions {actual:?} disagree with the closed form {expected:?}")]
    DimensionMismatch {
        actual: (usize, usize),
        expected: (usize, usize),
    },
}

pub type Result<T> = std::result::Result<T, Error>;
