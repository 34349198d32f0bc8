use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("region error: {0}")]
    Region(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("oracle inconsistency in {what}: relative difference {rel_diff:e}")]
    OracleInconsistency { what: String, rel_diff: f64 },
    #[error("truncation error: {0}")]
    Truncation(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn region(msg: impl Into<String>) -> Error {
    Error::Region(msg.into())
}
