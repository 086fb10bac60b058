use thiserror::Error;

use crate::lattice::IndexSet;
use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library. Indices carried by variants are 0-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension must be positive")]
    EmptyDimension,
    #[error("duplicate coefficient for ({i},{k}) -> {j}")]
    DuplicateEntry { i: usize, k: usize, j: usize },
    #[error("negative coefficient for ({i},{k}) -> {j}: {value}")]
    NegativeEntry {
        i: usize,
        k: usize,
        j: usize,
        value: Rational,
    },
    #[error("offspring distribution of ({i},{k}) sums to {sum}, expected 1")]
    NotStochastic { i: usize, k: usize, sum: Rational },
    #[error("not a simplex point: {0}")]
    NotSimplexPoint(String),
    #[error("the algebra is not Bernstein")]
    NotBernstein,
    #[error("vector is not a nonzero idempotent of weight 1")]
    NotIdempotent,
    #[error("face {0} is not invariant")]
    NotInvariantFace(IndexSet),
    #[error("{what} = {value} exceeds the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("pool structure requires every basis vector to be idempotent")]
    MixedCase,
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
