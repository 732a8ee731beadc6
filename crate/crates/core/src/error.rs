use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("graph with {0} vertices exceeds the configured maximum of {1}")]
    TooLarge(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a member of the required class: {0}")]
    WrongClass(String),
    #[error("witness rejected: {0}")]
    InvalidWitness(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("search budget exhausted")]
    BudgetExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;
