use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("relation {relation} mentions unknown generator {name:?}")]
    UnknownGenerator { relation: usize, name: String },
    #[error("generator {0:?} is declared more than once")]
    DuplicateGenerator(String),
    #[error("the generator list is empty")]
    EmptyGenerators,
    #[error("relation {0} is the empty word")]
    EmptyRelation(usize),
    /// Normalization eliminated every generator, so the algebra is just `k`.
    #[error("every generator is a relation; the algebra collapses to the ground field")]
    Collapsed,
    #[error("{what} would exceed the configured cap of {cap} elements")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
}
