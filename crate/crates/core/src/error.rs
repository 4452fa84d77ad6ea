use thiserror::Error;

use crate::evidence::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("frame of discernment must contain at least one hypothesis")]
    EmptyFrame,

    #[error("hypothesis label must be non-empty")]
    EmptyLabel,

    #[error("hypothesis `{0}` appears more than once in the frame")]
    DuplicateHypothesis(String),

    #[error("hypothesis `{0}` is not part of the frame of discernment")]
    UnknownHypothesis(String),

    #[error("focal element lists `{0}` more than once")]
    DuplicateMember(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid basic probability assignment: {0}")]
    InvalidBpa(ValidationReport),

    #[error(
        "logical network has {nodes} node(s) but at least {required} are needed; \
         a BPA with no assignment or a single assigned element leaves nothing undiscovered to measure"
    )]
    TooFewNodes { nodes: usize, required: usize },

    #[error("sequence of length {len} is too short for embedding dimension {required}")]
    SequenceTooShort { len: usize, required: usize },

    #[error("sequence must not be empty")]
    EmptySequence,

    #[error("sequence contains a non-finite value at position {0}")]
    NonFinite(usize),

    #[error("vector lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("tolerance r = {0} admits no matches, not even self-matches")]
    DegenerateTolerance(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
