use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclotomic orders differ: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    Budget {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("non-integral multiplicity for {0}")]
    NonIntegral(String),
    #[error("precondition violated: {0}")]
    Contract(String),
}
