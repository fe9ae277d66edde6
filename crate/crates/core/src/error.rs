use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("field: {0}")]
    Field(String),
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("enumeration budget exceeded: {what} needs {needed} > {budget}")]
    BudgetExceeded { what: String, needed: f64, budget: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("generators {0} and {1} do not commute")]
    NotSelfOrthogonal(usize, usize),
    #[error("stabilizers not nested at level {level}: generator {generator} of the larger code is missing")]
    NotNested { level: usize, generator: String },
    #[error("bad Pauli character {0:?}")]
    BadPauli(char),
    #[error("level {level}: outer alphabet has {provided} symbols, chain expects {expected}")]
    AlphabetMismatch { level: usize, expected: u64, provided: u64 },
    #[error("incompatible construction: {0}")]
    Incompatible(String),
    #[error("undecidable with this strategy: {0}")]
    Undecidable(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("code is not additive: {0}")]
    NotAdditive(String),
    #[error("verification failed: {0}")]
    Verification(String),
}
