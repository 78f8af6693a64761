use thiserror::Error;

/// Errors raised by the staircase toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable `{name}` out of range for {nvars} variables")]
    VariableOutOfRange { name: String, nvars: usize },

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("number of variables must be positive")]
    NoVariables,

    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("exponent {0} exceeds the supported bound 2^31-1")]
    ExponentOverflow(u64),

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("colength exceeds the configured cap of {cap}")]
    ColengthCap { cap: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid variable index {index} for {nvars} variables")]
    BadIndex { index: usize, nvars: usize },

    #[error("operation requires 3 variables, got {0}")]
    UnsupportedDimension(usize),

    #[error("hull has intrinsic dimension {0}; a 2- or 3-dimensional hull is required")]
    DegenerateHull(usize),

    #[error("parameter {param} is out of range for family {kind}")]
    InvalidParam { kind: String, param: u32 },

    #[error("unknown family kind `{0}`")]
    UnknownFamily(String),

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("colength {n} exceeds the enumeration cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("malformed OFF data: {0}")]
    Off(String),

    #[error("malformed cache line {line}: {msg}")]
    Cache { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
