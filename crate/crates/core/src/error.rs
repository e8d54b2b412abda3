use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad partite sizes, inconsistent counts, unparsable files.
    #[error("invalid input: {0}")]
    Input(String),
    /// Well-formed input outside the range an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),
    /// A search cap or node budget was exceeded. Never returned alongside a partial answer.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
