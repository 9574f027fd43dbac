use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad generator lists, dimension mismatches, unparsable files.
    #[error("validation error: {0}")]
    Validation(String),

    /// An operation was called outside its domain (a face not in the complex,
    /// a point off the distraction variety, a positive-dimensional system, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A computation exceeded a hard bound (resampling budget, enumeration size).
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
