use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet bound p = {p} is outside 1..={max}")]
    InvalidAlphabet { p: i64, max: u8 },

    #[error("index n = {n} is below the defined range (n >= {min}) for p = {p}")]
    IndexOutOfRange { p: u8, n: i64, min: i64 },

    #[error("{digits:?} is not a {p}-Fibonacci word: {reason}")]
    InvalidWord {
        p: u8,
        digits: Vec<u8>,
        reason: String,
    },

    #[error("operation requires a non-empty word")]
    EmptyWord,

    #[error("part {part} is not in the allowed part set {allowed:?}")]
    InvalidPart { part: u64, allowed: Vec<u64> },

    #[error("binary word has a run of {run} ones; at most {max} allowed for p = {p}")]
    InvalidBinary { p: u8, run: usize, max: usize },

    #[error("enumeration of {requested} objects exceeds the cap of {cap}")]
    CapExceeded { requested: String, cap: u64 },

    #[error("denominator is not invertible as a power series: {0}")]
    BadDenominator(String),

    #[error("parse error: {0}")]
    Parse(String),
}
