use thiserror::Error;

/// Errors surfaced by the library.
///
/// Mathematical "false" verdicts are never errors; these cover invalid
/// inputs, unusable fields, resource aborts, and failed verification checks.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("unusable field: {0}")]
    InvalidField(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("certificate unsound: {0}")]
    Certificate(String),

    #[error("verification check failed: {0}")]
    Check(String),
}

pub type Result<T> = std::result::Result<T, Error>;
