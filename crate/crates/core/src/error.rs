use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in partition expression at `{token}`")]
    Syntax { token: String },

    #[error("parts must be weakly decreasing: {0}")]
    NotDecreasing(String),

    #[error("parts must be positive")]
    ZeroPart,

    #[error("({row},{col}) is not a node of {partition}")]
    InvalidNode {
        row: usize,
        col: usize,
        partition: String,
    },

    #[error("valuation of zero is undefined")]
    ZeroValuation,

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("{partition} is not {p}-irreducible")]
    NotIrreducible { partition: String, p: usize },

    #[error("{partition} is not {p}-hook free")]
    NotHookFree { partition: String, p: usize },

    #[error("middle component may only be empty when top or bottom is empty")]
    EmptyMiddle,

    #[error("{partition} has more than {k} parts")]
    TooLong { partition: String, k: usize },

    #[error("{partition} is not a {p}-top over {k} rows")]
    NotInImage {
        partition: String,
        k: usize,
        p: usize,
    },

    #[error("invalid label pair: {0}")]
    InvalidPair(String),

    #[error("p = 2 is not handled by the pair enumeration; use the block enumeration")]
    PrimeTwo,

    #[error("special case: p = 2 with n = 4 lies outside the counting theorem; use the oracle")]
    SpecialCase,

    #[error("n = {n} exceeds the oracle limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("arithmetic overflow")]
    Overflow,

    #[error("construction defect: {0}")]
    ConstructionDefect(String),
}
