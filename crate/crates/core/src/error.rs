use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("corrupt code: {0}")]
    CorruptCode(String),

    #[error("corrupt design: {0}")]
    CorruptDesign(String),

    #[error("restriction is not a Steiner system: {0}")]
    NotClosed(String),

    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),

    #[error("theory violation: {0}")]
    TheoryViolation(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
