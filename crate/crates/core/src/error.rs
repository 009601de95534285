use thiserror::Error;

use crate::polynomial::Polynomial;

/// Errors raised at operation boundaries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: left operand has d = {left}, right operand has d = {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },

    #[error("u_{{{0},{0}}} is identically zero and is not a generator")]
    DegenerateDeterminant(usize),

    #[error("indices must be strictly increasing, got {0:?}")]
    NotIncreasing(Vec<usize>),

    #[error("matrix is singular (determinant zero)")]
    Singular,

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("not in the kernel: δ(f) = {image}")]
    NotConstant { image: Polynomial },

    #[error("polynomial is not homogeneous with respect to the multidegree")]
    NotHomogeneous,

    #[error("polynomial is not bi-homogeneous")]
    NotBihomogeneous,

    #[error("zero polynomial has no weight")]
    ZeroPolynomial,

    #[error("invalid pairing plan: {0}")]
    InvalidPlan(String),

    #[error("tensor content mismatch: expected {expected:?}, found {found:?}")]
    ContentMismatch { expected: Vec<u32>, found: Vec<u32> },

    #[error("permutation of length {perm} applied to words of length {word}")]
    LengthMismatch { perm: usize, word: usize },

    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("partition {0:?} has more than two rows")]
    TooManyRows(Vec<u32>),

    #[error("partition of {partition} does not match content of size {content}")]
    SizeMismatch { partition: u32, content: u32 },

    #[error("CONJECTURE VIOLATION: {f} is a constant of multidegree {n} outside the span of the products")]
    ConjectureViolation { f: Polynomial, n: String },
}

pub type Result<T> = std::result::Result<T, Error>;
