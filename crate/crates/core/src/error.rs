use thiserror::Error;

/// Every failure the engine can report. Numeric payloads are decimal strings so that
/// errors stay printable without a precision context.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("no convergence in {what}: last estimate {estimate}")]
    NonConvergence { what: String, estimate: String },
    #[error("routes disagree in {what}: gap {gap} exceeds {allowed}")]
    Disagreement { what: String, gap: String, allowed: String },
    #[error("precision exhausted in {what}: {lost} digits lost, {available} available")]
    PrecisionExhausted { what: String, lost: u32, available: u32 },
    #[error("invalid method: {0}")]
    InvalidMethod(String),
    #[error("unknown catalog selector: {0}")]
    UnknownSelector(String),
    #[error("catalog registry rejected: {0}")]
    Registry(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn no_convergence(what: impl Into<String>, estimate: &rug::Float) -> Self {
        Error::NonConvergence { what: what.into(), estimate: crate::precision::sci(estimate, 6) }
    }
}
