use thiserror::Error;

use crate::nsym::Basis;

/// Errors raised by the combinatorial and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An element was passed in a basis the operation does not accept.
    #[error("basis error: expected {expected}, found {found}")]
    Basis { expected: String, found: Basis },

    /// Two compositions are not comparable in the reverse composition poset.
    #[error("order error: {inner} is not below {outer} in the reverse composition poset")]
    Order { inner: String, outer: String },

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal identity that must always hold did not.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
