use thiserror::Error;

/// Errors raised by the algebra kernel and the text front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands live in different rings")]
    ContextMismatch,

    #[error("variable `{0}` has no image under the substitution")]
    UnmappedVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("ring carries no torus weights")]
    MissingWeights,

    #[error("ideal is not homogeneous in the standard grading")]
    NotHomogeneous,

    #[error("generator `{0}` is not a monomial")]
    NotMonomial(String),

    #[error("cannot eliminate every variable of the ring")]
    EliminateAll,

    #[error("ideal is not contained in the source ideal")]
    NotContained,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
