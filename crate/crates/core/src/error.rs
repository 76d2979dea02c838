use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text. Lines and columns are 1-based.
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("variable `{0}` is not in the vocabulary")]
    VocabularyMismatch(String),
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    /// A size guard tripped before an exponential enumeration started.
    #[error("{what}: {actual} exceeds the limit of {limit}")]
    Resource {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("argument `{id}`: {reason}")]
    InvalidArgument { id: String, reason: String },
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Error::Resource {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
