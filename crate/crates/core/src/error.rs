use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} outside the supported range 2..=251")]
    ModulusOutOfRange(u32),
    #[error("operands belong to different contexts")]
    ContextMismatch,
    #[error("value {value} is not a residue modulo {p}")]
    NotAResidue { value: u32, p: u8 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operation requires p = 2, got p = {0}")]
    UnsupportedField(u8),
    #[error("ambient length {p}^{m} exceeds 2^24")]
    AmbientTooLarge { p: u8, m: usize },
    #[error("number of variables must be at least 1")]
    NoVariables,
    #[error("{what} = {value} outside the range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("weights must be ascending and positive: {0:?}")]
    InvalidWeights(Vec<u32>),
    #[error("{construction}: constructed rows have rank {rank}, expected {expected}")]
    RankDeficient {
        construction: &'static str,
        rank: usize,
        expected: usize,
    },
    #[error("enumeration of {p}^{k} codewords exceeds the bound 2^{bound_log2}")]
    EnumerationTooLarge { p: u8, k: usize, bound_log2: u32 },
    #[error("ragged rows: row {row} has length {got}, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
