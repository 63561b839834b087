use thiserror::Error;

/// Every failure the library can report.
///
/// Positions in messages (rows, columns, sequence indices) are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("symbol {symbol:?} is not a valid sequence symbol")]
    InvalidSymbol { symbol: char },

    #[error("a k-sequence needs at least one sequence")]
    EmptyKSequence,

    #[error("operation needs at least {needed} sequences, got {got}")]
    TooFewSequences { needed: usize, got: usize },

    #[error("exact algorithms support at most {max} sequences, got {got}")]
    TooManySequences { max: usize, got: usize },

    #[error("alignment has no rows")]
    NoRows,

    #[error("alignment row {row} has length {len}, expected {expected}")]
    UnequalRowLengths {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("alignment column {column} contains only gaps")]
    AllGapColumn { column: usize },

    #[error("alignment row {row} does not degap to sequence {row}")]
    RowMismatchesSequence { row: usize },

    #[error("alignment has {rows} rows but the k-sequence has {k}")]
    RowCountMismatch { rows: usize, k: usize },

    #[error("index set is empty")]
    EmptyIndexSet,

    #[error("index {index} is out of range 1..={k} or not strictly increasing")]
    IndexOutOfRange { index: usize, k: usize },

    #[error("bit vector exceeds index vector at position {position}")]
    BitExceedsIndex { position: usize },

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("column bit vectors sum to {got:?}, expected {expected:?}")]
    BitSumMismatch {
        expected: Vec<usize>,
        got: Vec<usize>,
    },

    #[error("column {column} is defined by the zero bit vector")]
    ZeroColumn { column: usize },

    #[error("expected a 2-row alignment, got {rows} rows")]
    WrongRowCount { rows: usize },

    #[error("matrix array holds {got} matrices, {expected} needed for {k} sequences")]
    ArityMismatch {
        k: usize,
        expected: usize,
        got: usize,
    },

    #[error("scale factor must be positive")]
    NonPositiveScale,

    #[error("scoring matrix entry for ({row}, {col}) is negative")]
    NegativeEntry { row: char, col: char },

    #[error("symbol {symbol:?} of sequence {sequence} is not in the matrix alphabet")]
    AlphabetMismatch { sequence: usize, symbol: char },

    #[error("matrices of an array must share one alphabet")]
    MixedAlphabets,

    #[error("estimated {estimate} cells exceeds the cap of {cap}")]
    ResourceCapExceeded { estimate: u128, cap: u128 },

    #[error("induced length vector out of range: {0}")]
    LengthVectorOutOfRange(String),

    #[error("star is incoherent: {0}")]
    IncoherentStar(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
