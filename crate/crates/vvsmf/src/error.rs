//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("cannot split polynomial factor of degree {degree}: {reason}")]
    CannotSplit { degree: usize, reason: String },

    #[error("coefficient denominator divisible by {ell}")]
    DenominatorDivisibleByEll { ell: u64 },

    #[error("lattice basis vectors are linearly dependent")]
    DependentBasis,

    #[error("no integer relation found at this precision")]
    NoRelationFound,

    #[error("modulus is reducible over Q: {0}")]
    ReducibleModulus(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("truncation too short: {0}")]
    InsufficientTruncation(String),

    #[error("eigenvalue escapes the field generated by lambda_2: {0}")]
    EigenvalueEscapesField(String),

    #[error("memory guard: {0}")]
    ResourceGuard(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("indefinite quadratic form [{a},{b},{c}]")]
    IndefiniteForm { a: i64, b: i64, c: i64 },

    #[error("coefficient index out of stored bounds: {0}")]
    OutOfBounds(String),

    #[error("incompatible expansions: {0}")]
    Incompatible(String),

    #[error("cannot reach full rank within stored indices (rank {rank} of {dim})")]
    RankDeficient { rank: usize, dim: usize },

    #[error("eigenvalue extraction failed: {0}")]
    EigenvalueExtraction(String),

    #[error("root finding did not converge: {0}")]
    NoConvergence(String),

    #[error("precision failure: {0}; retry with at least {suggested} bits")]
    PrecisionFailure { 0: String, suggested: u32 },

    #[error("weight relation violated: {0}")]
    WeightRelation(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
