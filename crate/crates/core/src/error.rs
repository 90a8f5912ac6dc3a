use thiserror::Error;

/// Errors raised by the dimension engines.
///
/// Imbalance of a dimension equation is never an error; it is reported
/// through [`crate::BalanceReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed partition, group or expression text.
    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },

    /// Arguments outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A functional that is not admissible in the requested equation mode.
    #[error("mode error: {0}")]
    Mode(String),

    /// Unknown catalog id or pattern.
    #[error("lookup error: {0}")]
    Lookup(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
