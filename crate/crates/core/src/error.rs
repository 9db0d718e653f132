use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not a tournament: entries ({i},{j}) and ({j},{i}) are inconsistent")]
    NotATournament { i: usize, j: usize },

    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },

    #[error("not a bijection on 0..{0}")]
    NotABijection(usize),

    #[error("degenerate pair ({0},{0})")]
    DegeneratePair(usize),

    #[error("order {order} exceeds the limit {limit} for this operation")]
    TooLarge { order: usize, limit: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("tournament is decomposable")]
    NotIndecomposable,

    #[error("no indecomposable extension pair exists")]
    NotFound,

    #[error("vertex {vertex} falls into more than one class: {classes}")]
    PartitionConflict { vertex: usize, classes: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("verification failed [{suite}]: {detail}")]
    VerificationFailed { suite: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
