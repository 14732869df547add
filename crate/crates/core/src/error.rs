use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field: {0}")]
    Field(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ambient mismatch: {0}")]
    Ambient(String),
    #[error("twist mismatch: {0}")]
    Twist(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("wrong codimension: expected {expected}, found {found}")]
    Codimension { expected: usize, found: i64 },
    #[error("genericity failure after {attempts} seeds: {reason}")]
    Genericity { attempts: usize, reason: String },
    #[error("ideal is not saturated")]
    Unsaturated,
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
