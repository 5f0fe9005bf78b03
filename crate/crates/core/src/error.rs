use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("column {column} not bijective: entry {entry} repeated")]
    ColumnNotBijective { column: usize, entry: usize },

    #[error(
        "identity axiom violated at row {row}, column {column}: expected {expected}, found {found}"
    )]
    IdentityAxiom {
        row: usize,
        column: usize,
        expected: usize,
        found: usize,
    },

    #[error("entry {entry} at row {row}, column {column} outside 1..={n}")]
    EntryOutOfRange {
        row: usize,
        column: usize,
        entry: usize,
        n: usize,
    },

    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),

    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("order {n} exceeds the oracle bound {bound}; pass the override to force it")]
    OracleBound { n: usize, bound: usize },

    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
