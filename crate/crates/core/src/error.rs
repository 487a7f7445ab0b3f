use thiserror::Error;

/// Errors produced by the library. Each variant maps to a stable code
/// (see [`Error::code`]) that the command-line front end reports verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension must be at least 1")]
    EmptyAmbient,

    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no weight")]
    ZeroPolynomial,

    #[error("invalid weight: {0}")]
    WeightShape(String),

    #[error("weight entries have gcd {gcd}, expected 1")]
    WeightGcd { gcd: u64 },

    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("variable x{index} out of range for {n} variables (indices are 1-based)")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("expected a monomial, found `{0}`")]
    NotAMonomial(String),

    #[error("radical is not generated by variables: {0}")]
    RadicalNotPrime(String),

    #[error("the zero ideal and the unit ideal have no monomial prime radical")]
    TrivialIdeal,

    #[error("the trivial group has no non-identity elements")]
    TrivialGroup,

    #[error("ill-formed action 1/{order}(..): gcd of order and twists is {gcd}")]
    IllFormedAction { order: u64, gcd: u64 },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("weight entry at index {index} is zero")]
    ZeroWeightEntry { index: usize },

    #[error("no contraction with n = {n}, r = {r}: need r + 2 <= n")]
    NoSuchContraction { n: usize, r: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyAmbient => "EMPTY_AMBIENT",
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::ZeroPolynomial => "ZERO_POLYNOMIAL",
            Error::WeightShape(_) => "INVALID_WEIGHT",
            Error::WeightGcd { .. } => "WEIGHT_GCD",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::VariableOutOfRange { .. } => "VARIABLE_OUT_OF_RANGE",
            Error::NotAMonomial(_) => "NOT_A_MONOMIAL",
            Error::RadicalNotPrime(_) => "RADICAL_NOT_PRIME",
            Error::TrivialIdeal => "TRIVIAL_IDEAL",
            Error::TrivialGroup => "TRIVIAL_GROUP",
            Error::IllFormedAction { .. } => "ILL_FORMED_ACTION",
            Error::IndexOutOfRange { .. } => "INDEX_OUT_OF_RANGE",
            Error::ZeroWeightEntry { .. } => "ZERO_WEIGHT_ENTRY",
            Error::NoSuchContraction { .. } => "NO_SUCH_CONTRACTION",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
            Error::InvariantViolation(_) => "INVARIANT_VIOLATION",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
