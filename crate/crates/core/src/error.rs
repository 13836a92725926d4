use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {0} exceeds the supported maximum of {max}", max = crate::table::MAX_ARITY)]
    ArityTooLarge(usize),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable x{} is out of range for arity {arity}", .var + 1)]
    VariableOutOfRange { var: usize, arity: usize },
    #[error("variable x{} is bound more than once", .0 + 1)]
    DuplicateBinding(usize),
    #[error("not a permutation of {0} variables")]
    NotAPermutation(usize),
    #[error("point index {index} is out of range for arity {arity}")]
    PointOutOfRange { index: u64, arity: usize },
    #[error("invalid truth table `{text}`: {reason}")]
    InvalidTable { text: String, reason: String },
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("function is not positive")]
    NotPositive,
    #[error("function is not a threshold function")]
    NotThreshold,
    #[error("point {0} is a true point of the function")]
    NotAZero(String),
    #[error("variable x{} is irrelevant for the function", .0 + 1)]
    IrrelevantVariable(usize),
    #[error("k = {0} is outside the supported summability range 2..=3")]
    UnsupportedK(usize),
    #[error("{what} has {count} variables, limit is {limit}")]
    TooManyVariables {
        what: &'static str,
        count: usize,
        limit: usize,
    },
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("inconsistent classification report: {0}")]
    InconsistentReport(String),
}
