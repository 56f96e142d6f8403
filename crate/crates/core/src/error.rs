use thiserror::Error;

/// Errors raised by the algebra, the solver and the fixture harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree incompatible with τ")]
    DegreeIncompatibleWithTau,

    #[error("degree/arity mismatch: {0}")]
    DegreeArityMismatch(String),

    #[error("column cap exceeded: {columns} columns for k={k}, degree {degree} (limit {cap})")]
    Capacity { k: usize, degree: u64, columns: u128, cap: usize },

    #[error("parity error: n - k = {0} is odd")]
    Parity(i64),

    #[error("{0}")]
    Invalid(String),

    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("inhomogeneous term `{term}`: expected degree {expected}, found {found}")]
    Inhomogeneous { term: String, expected: u64, found: u64 },

    #[error("{path}: {message}")]
    Fixture { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
