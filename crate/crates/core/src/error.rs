use thiserror::Error;

/// Errors produced by the lz76 library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty sequence: complexity is defined only for n >= 1")]
    EmptySequence,

    #[error("alphabet must contain at least {min} symbols, got {got}")]
    AlphabetTooSmall { min: usize, got: usize },

    #[error("alphabet has {0} symbols; at most 256 are supported")]
    AlphabetTooLarge(usize),

    #[error("alphabet symbol {0:?} appears more than once")]
    DuplicateSymbol(char),

    #[error("symbol index {index} at position {position} is outside an alphabet of size {size}")]
    SymbolOutOfRange {
        index: usize,
        position: usize,
        size: usize,
    },

    #[error("byte {byte:#04x} ({shown:?}) at offset {offset} is not in the alphabet {alphabet:?}")]
    UnknownSymbol {
        byte: u8,
        shown: char,
        offset: usize,
        alphabet: String,
    },

    #[error("sequence length {len} exceeds the brute-force oracle cap of {cap}")]
    OracleCapExceeded { len: usize, cap: usize },

    #[error("enumerating {alphabet_size}^{length} = {required} sequences exceeds the enumeration budget of {budget}")]
    BudgetExceeded {
        alphabet_size: usize,
        length: usize,
        required: String,
        budget: u64,
    },

    #[error("threshold n / log_alpha n is degenerate for alphabet size {alphabet_size} and length {length} (requires n > alpha); pass an explicit threshold")]
    DegenerateThreshold { alphabet_size: usize, length: usize },

    #[error("threshold {k} must lie in 1..={length}")]
    ThresholdOutOfRange { k: usize, length: usize },

    #[error("no count table for alphabet size {alphabet_size}, length {length}")]
    TableUnavailable { alphabet_size: usize, length: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("malformed table data: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
