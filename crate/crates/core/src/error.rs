use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation of 1..n: {0}")]
    InvalidPermutation(String),

    #[error("word contains duplicate entries")]
    DuplicateEntries,

    #[error("position {pos} out of range for length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("permutation does not avoid 132")]
    Not132Avoiding,

    #[error("malformed Dyck path: {0}")]
    InvalidDyckPath(String),

    #[error("invalid non-decreasing parking function: {0}")]
    InvalidParkingFunction(String),

    #[error("tree labels are not a decreasing labelling")]
    NotDecreasingLabels,

    #[error("malformed tree shape: {0}")]
    InvalidTreeShape(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("no 132-avoiding permutation has descent composition {0:?}")]
    EmptyDescentClass(Vec<usize>),

    #[error("descent class has no Tamari-{0} element")]
    NoExtremeElement(&'static str),

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("denominator has zero constant term")]
    ZeroConstantTerm,

    #[error("series expansion has a non-integer coefficient")]
    NonIntegerSeries,

    #[error("integer overflow in exact computation")]
    Overflow,

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
