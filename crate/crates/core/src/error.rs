use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid dimension: cannot choose {m} cards from a deck of {n}")]
    InvalidDimension { n: usize, m: usize },

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("invalid arc: {0}")]
    InvalidArc(String),

    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("coloring is over J(n={found_n}, a={found_a}) but the signature requires n={n}, a={a}")]
    DimensionMismatch {
        n: usize,
        a: usize,
        found_n: usize,
        found_a: usize,
    },

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("undefined: {0}")]
    Undefined(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("inconsistent announcement: {0}")]
    InconsistentAnnouncement(String),

    #[error("ambiguous announcement: {0}")]
    Ambiguous(String),

    #[error("not minimally informative at this clique: {0}")]
    NotMinimallyInformative(String),

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
