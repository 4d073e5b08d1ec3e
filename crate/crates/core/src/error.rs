use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("braid class exceeds cap of {cap} words")]
    ClassCapExceeded { cap: usize },
    #[error("element length {length} exceeds cap {cap}")]
    LengthCapExceeded { length: usize, cap: usize },
    #[error("interval size {size} exceeds cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("element is not in the interval")]
    NotInInterval,
    #[error("{0} is not a descent of the top element")]
    NotADescent(String),
    #[error("not a matching: {0}")]
    NotAMatching(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
