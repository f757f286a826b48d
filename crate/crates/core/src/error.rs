use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate start declaration at line {line}")]
    DuplicateStart { line: usize },

    #[error("invalid grammar: {0}")]
    InvalidGrammar(String),

    #[error("unknown token `{token}` at position {position}")]
    UnknownToken { token: String, position: usize },

    #[error("item kind mismatch: expected {expected} items")]
    KindMismatch { expected: &'static str },

    #[error("search budget of {budget} configurations exhausted")]
    BudgetExhausted { budget: usize },

    #[error("column {column} is not complete")]
    ColumnIncomplete { column: usize },

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}
