use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("index {index} out of range for side length {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("tensor is not stochastic")]
    NotStochastic,

    #[error("not a permutation tensor: {0}")]
    NotPermutationTensor(String),

    #[error("invalid Latin square: {0}")]
    InvalidLatinSquare(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("integrity violation: {0}")]
    Integrity(String),
}
