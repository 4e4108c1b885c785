use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{context}: expected an integer, got {value}")]
    NotIntegral { context: String, value: String },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("bijection precondition failed: {0}")]
    Precondition(String),

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error("unsupported specialization ({0}, {1})")]
    UnsupportedSpecialization(i64, i64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
