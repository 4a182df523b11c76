use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a partition: {0}")]
    InvalidDiagram(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("parity: {0}")]
    Parity(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("input too large for brute force: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("empty sample")]
    EmptySample,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
