use thiserror::Error;

/// Failures surfaced by the core library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("leading coefficient must be non-zero")]
    ZeroLeading,
    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),
    #[error("square-root radicand must be non-negative, got {0}")]
    NegativeRadicand(String),
    #[error("invalid interval: lower end exceeds upper end")]
    InvalidInterval,
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
