use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed diagram: {0}")]
    Malformed(String),

    #[error("unknown arc label {0}")]
    UnknownArc(u32),

    #[error("arc labels must differ, got {0} twice")]
    IdenticalArcs(u32),

    #[error("arcs {0} and {1} do not border a common face")]
    NoCommonFace(u32, u32),

    #[error("state has length {got}, diagram has {expected} crossings")]
    StateLength { expected: usize, got: usize },

    #[error("bit {0} of the state is already 1")]
    BitAlreadySet(usize),

    #[error("generator does not live on the source state of the edge")]
    StateMismatch,

    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },

    #[error("smoothing has {0} circles, too many generators to enumerate")]
    TooManyCircles(usize),

    #[error("family member for choice {choice} has {crossings} crossings, above the cap of {cap}")]
    MemberCapExceeded {
        choice: String,
        crossings: usize,
        cap: usize,
    },

    #[error("invalid replacement choice: {0}")]
    InvalidChoice(String),

    #[error("corrupted chain complex: {0}")]
    CorruptComplex(String),
}

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    /// True for errors raised while reading or validating input text.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::Malformed(_)
                | Error::UnknownArc(_)
                | Error::IdenticalArcs(_)
                | Error::NoCommonFace(..)
                | Error::InvalidChoice(_)
        )
    }

    pub fn is_resource_error(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::MemberCapExceeded { .. } | Error::TooManyCircles(_)
        )
    }
}
