use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input. `position` is a byte offset (or token index
    /// for word syntax) into the offending text.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("matrix is not symplectic: {identity} fails")]
    NotSymplectic { identity: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("form is not symmetric at entry ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("unknown generator name `{0}`")]
    UnknownGenerator(String),

    #[error("relator {index} (`{word}`) does not evaluate to the identity")]
    BadRelator { index: usize, word: String },

    #[error("no Meyer function exists for this presentation: the signature class has infinite order")]
    NoMeyerFunction,

    #[error("unsupported genus {genus}: {reason}")]
    UnsupportedGenus { genus: usize, reason: String },

    #[error("fibration is not closed: {0}")]
    NotClosed(String),

    #[error("total signature {0} is not an integer; germ data is inconsistent")]
    NonIntegerTotal(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed input text.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            position: e.column(),
            message: format!("json (line {}): {}", e.line(), e),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
