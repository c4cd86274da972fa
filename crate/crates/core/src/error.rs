use std::fmt;

use thiserror::Error;

/// A violated scenario invariant: which field, and what went wrong with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationError {
    pub field: String,
    pub constraint: String,
}

impl ValidationError {
    pub fn new(field: impl Into<String>, constraint: impl Into<String>) -> Self {
        Self {
            field: field.into(),
            constraint: constraint.into(),
        }
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.constraint)
    }
}

impl std::error::Error for ValidationError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DispatchError {
    #[error("cost matrix must have at least one row and one column")]
    Empty,
    #[error("cost matrix row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("cost matrix entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("cost matrix entry ({row}, {col}) is negative")]
    Negative { row: usize, col: usize },
    #[error("oracle size limit: n = {0} exceeds {max}", max = crate::dispatch::ORACLE_MAX_N)]
    OracleSizeLimit(usize),
    #[error("brute-force oracle requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("mapping has {found} rows but the matrix has only {rows}")]
    MappingTooLong { rows: usize, found: usize },
    #[error("mapping row {row} points at column {col}, outside 0..{cols}")]
    ColumnOutOfRange { row: usize, col: usize, cols: usize },
    #[error("column {col} is assigned to both row {first} and row {second}")]
    DuplicateColumn {
        col: usize,
        first: usize,
        second: usize,
    },
    #[error("cost grid line {line}: {message}")]
    Grid { line: usize, message: String },
}

/// Top-level error, tagged with the module it came from.
#[derive(Debug, Error)]
pub enum Error {
    #[error("scenario-model: {0}")]
    Validation(#[from] ValidationError),
    #[error("dispatch: {0}")]
    Dispatch(#[from] DispatchError),
    #[error("scenario-model: cannot parse scenario: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("report: {0}")]
    Report(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
