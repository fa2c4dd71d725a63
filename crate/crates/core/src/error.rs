use thiserror::Error;

pub type Result<T> = std::result::Result<T, TableauError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid skew shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau is not standard: {0}")]
    NotStandard(String),
    #[error("entry {0} occurs more than once")]
    DuplicateEntry(u32),
    #[error("word has a repeated letter {0}")]
    RepeatedLetter(u32),
    #[error("cell ({row}, {col}) is not a removable corner of the inner shape")]
    NotInnerCorner { row: usize, col: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration limit exceeded: {cells} cells requested, limit is {limit}")]
    LimitExceeded { cells: usize, limit: usize },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("stabilization not reached within {0} copies")]
    NoStabilization(usize),
}

impl From<serde_json::Error> for TableauError {
    fn from(err: serde_json::Error) -> Self {
        TableauError::Parse {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}
