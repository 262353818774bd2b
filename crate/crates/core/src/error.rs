use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field of size {size} exceeds the enumeration bound {bound}")]
    EnumerationBound { size: u128, bound: u128 },

    #[error("work estimate {needed} exceeds the budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("undefined in characteristic 2: {0}")]
    Characteristic2(&'static str),

    #[error("element is not in {0}")]
    NotInSubset(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
