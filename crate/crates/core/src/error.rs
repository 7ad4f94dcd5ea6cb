//! Error classes shared by every module.

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Error classes raised by the library.
///
/// Each variant corresponds to one failure class: shape/size violations,
/// out-of-range numeric arguments, out-of-range indices, invalid
/// configuration, and invalid input data (NaN/Inf, negative where
/// nonnegative is required).
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index error: {0}")]
    Index(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("data error: {0}")]
    Data(String),
}

impl Error {
    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn index(msg: impl Into<String>) -> Self {
        Error::Index(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }
}
