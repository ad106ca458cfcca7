use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree sequence is not graphical")]
    NonGraphical,

    #[error("no acceptable sample after {attempts} attempts")]
    AttemptsExhausted { attempts: u64 },

    #[error("count vectors do not match the instance: {0}")]
    CountMismatch(String),

    #[error("instance with n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("colored degree sequence is invalid: {0}")]
    InvalidSequence(String),

    #[error("transport is infeasible: {0}")]
    Infeasible(String),

    #[error("arcs between {u} and {v} do not carry conjugate colors")]
    InconsistentColors { u: usize, v: usize },

    #[error("value out of range: {0}")]
    RangeViolation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
