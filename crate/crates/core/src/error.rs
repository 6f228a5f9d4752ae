use thiserror::Error;

/// Errors raised by the exact-arithmetic layer, the sequence generators and
/// the verification harness.
///
/// Identity *failures* are not errors: they are reported through
/// [`crate::grid::CheckOutcome`] and the verification report. Everything in
/// here is either a caller mistake or a configuration problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("series precondition violated: {0}")]
    SeriesPrecondition(String),

    #[error("series order {order} too small for index {needed}")]
    OrderTooSmall { order: usize, needed: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown identity id `{0}`")]
    UnknownId(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
