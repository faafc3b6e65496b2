use thiserror::Error;

use crate::polynomial::Basis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size {n} out of range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },

    #[error("polynomial basis mismatch: {left} vs {right}")]
    BasisMismatch { left: Basis, right: Basis },

    #[error("expected a polynomial in basis {expected}, got {found}")]
    WrongBasis { expected: Basis, found: Basis },

    #[error("no value supplied for variable {0}")]
    MissingVariable(usize),

    #[error("partition {partition} does not fit under the staircase of size {n}")]
    StaircaseViolation { partition: String, n: usize },

    #[error("invalid weights: {0} (weights must satisfy 0 < W_1 < W_2 < ... < W_n)")]
    InvalidWeights(String),

    #[error(
        "dimension mismatch: permutation has size {permutation}, weights have length {weights}"
    )]
    DimensionMismatch { permutation: usize, weights: usize },

    #[error("sample count must be at least 1")]
    ZeroSamples,

    #[error("worker count must be at least 1")]
    ZeroWorkers,

    #[error("classification invariant violated: {0}")]
    ClassInvariant(String),

    #[error("cannot parse rational {0:?}")]
    InvalidRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
