use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument left the mathematical domain of an operation,
    /// e.g. a radius `r >= 1` or a Mobius parameter `a >= 1`.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structurally invalid input, e.g. overlapping weight progressions.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A stated precondition was violated (probe below the radius,
    /// psi/Q requested for an N > 1 problem, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The characteristic equation had no sign change on (0, 1).
    #[error("no root of the characteristic equation in (0, 1)")]
    NoRoot,

    /// A CLI specification string failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
