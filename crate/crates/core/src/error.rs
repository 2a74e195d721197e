use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("D must be a positive integer, got {0}")]
    InvalidD(i64),
    #[error("D = {0} is not squarefree")]
    NotSquarefree(i64),
    #[error("operands belong to different fields (D = {0} and D = {1})")]
    FieldMismatch(i64, i64),
    #[error("all generators are zero")]
    ZeroIdeal,
    #[error("Z-module is not an O_K-ideal: {0}")]
    NotAnIdeal(String),
    #[error("the second ideal is not contained in the first")]
    NotSubmodule,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ideal does not contain 1, so it is not in E")]
    NotInE,
    #[error("lattice basis is linearly dependent")]
    DegenerateLattice,
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
