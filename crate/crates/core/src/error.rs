use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdsError {
    /// Malformed table data (dimension or entry problems). Distinct from an
    /// axiom failure, which is reported through [`crate::AxiomReport`].
    #[error("structural error: {0}")]
    Structural(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("symbol {sym} out of range for carrier of size {size}")]
    SymbolOutOfRange { sym: u8, size: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("search guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(u8, u8, u8),

    #[error("pair of tables is not diassociative, witness ({0},{1},{2})")]
    NotDiassociative(u8, u8, u8),

    #[error("table is not a group: {0}")]
    NotAGroup(String),

    #[error("maps are not diassociative semigroup morphisms: {0}")]
    MorphismViolation(String),

    #[error("unsupported carrier size: {0}")]
    UnsupportedSize(String),

    #[error("inputs have mixed carrier sizes")]
    MixedSizes,
}

pub type Result<T> = std::result::Result<T, EdsError>;
