use thiserror::Error;

/// Errors raised by the computational layers.
///
/// Validation failures are *not* errors: they come back as reports. Errors are
/// reserved for malformed input and for computations that hit a configured cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("index {index} out of range (expected {range})")]
    IndexOutOfRange { index: usize, range: String },

    #[error("bracket tree has {found} leaves but {expected} degrees were supplied")]
    TreeMismatch { expected: usize, found: usize },

    #[error("adjoint nilpotency not reached within cap {cap} for pair ({i},{j})")]
    CapExceeded { i: usize, j: usize, cap: usize },

    #[error("reflection undefined at cap {cap}: pair ({i},{j}) after reflection sequence {sequence:?}")]
    ReflectionUndefined {
        sequence: Vec<usize>,
        i: usize,
        j: usize,
        cap: usize,
    },

    #[error("resource cap exceeded: {what} needs {needed}, limit is {limit}")]
    ResourceCap {
        what: String,
        needed: usize,
        limit: usize,
    },

    #[error("intertwiner search inconclusive: {0}")]
    Inconclusive(String),

    #[error("graph is not simply connected: two morphisms reach object {object} ({first:?} vs {second:?})")]
    NotSimplyConnected {
        object: usize,
        first: Vec<usize>,
        second: Vec<usize>,
    },

    #[error("graph is not connected: object {0} is unreachable from the base")]
    NotConnected(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
