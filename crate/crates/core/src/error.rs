use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by lattice constructions and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("gram matrix is not square: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("gram matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("vectors are linearly dependent")]
    DependentBasis,
    #[error("reflection vector has square {0}, expected +2 or -2")]
    BadReflectionSquare(BigInt),
    #[error("matrix does not preserve the gram matrix")]
    NotAnIsometry,
    #[error("rescaling factor must be nonzero")]
    ZeroScale,
    #[error("discriminant of the ambient lattice must be nonzero")]
    ZeroDiscriminant,
    #[error("invalid catalog parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed gram: {0}")]
    Parse(String),
}

/// Errors raised by the negative Pell solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PellError {
    #[error("D = {0} is a perfect square")]
    PerfectSquare(u64),
    #[error("D = {0} is out of range")]
    OutOfRange(u64),
    #[error("y^2 - {0} x^2 = -1 has no integer solution")]
    Unsolvable(u64),
    #[error("solution count must be at least 1")]
    ZeroCount,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Errors raised by the degree-family pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family index n must be >= 1, got {0}")]
    BadIndex(i64),
    #[error("degree must be even and >= 10, got {0}")]
    BadDegree(i64),
    #[error("{q4} is not {c} times a perfect square")]
    InconsistentFujiki { q4: i64, c: i64 },
    #[error("class h - {m} delta has square {square} in degree {d}, expected 2")]
    NotSquareTwo { d: i64, m: i64, square: BigInt },
    #[error("pairing (f, h_bar) = {fh_bar} lies outside 0 < (f, h_bar) < {bound}")]
    OutsideRegime { fh_bar: i64, bound: i64 },
    #[error("O'Grady parameter must be >= 0, got {0}")]
    NegativeR(i64),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Pell(#[from] PellError),
}
