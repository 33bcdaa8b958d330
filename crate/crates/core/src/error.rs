use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCount { expected: usize, found: usize },
    #[error("not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("ill-formed ring map: {0}")]
    IllFormedMap(String),
    #[error("ill-formed module map: {0}")]
    IllFormedModuleMap(String),
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error("not certified within the bound: {0}")]
    Uncertified(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
