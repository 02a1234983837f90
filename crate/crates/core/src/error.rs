use crate::ncalg::NcError;
use crate::scalars::ScalarError;
use thiserror::Error;

/// Errors from matrix, representation and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("X0 is not diagonal")]
    NonDiagonalX0,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("negative spin {0}")]
    NegativeSpin(String),
    #[error("spin must be a nonnegative half-integer, got {0}")]
    BadSpin(String),
    #[error("bad dimension {0}")]
    BadDimension(usize),
    #[error("bad sector total {0}")]
    BadSector(usize),
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("pole in lower parameter at n = {0}")]
    PoleInLowerParameter(usize),
    #[error("parse error at position {pos}: expected {expected}, found {found}")]
    Parse { pos: usize, expected: String, found: String },
    #[error("unknown target {0}")]
    UnknownTarget(String),
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("{0}")]
    Usage(String),
}
