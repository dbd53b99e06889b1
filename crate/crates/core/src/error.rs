use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    Field(u32),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("non-Dynkin: {0}")]
    NonDynkin(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("mutation class exceeds cap of {0} quivers")]
    ClassCap(usize),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
