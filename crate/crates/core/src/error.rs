use thiserror::Error;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division leaves a nonzero remainder")]
    NonExactDivision,

    #[error("expansion contains the term u^{u}*v^{v} with a negative exponent")]
    NotAPowerSeries { u: i64, v: i64 },

    #[error("the function has a pole at u = v = 1")]
    PoleAtOne,

    #[error("Poincare series of weights {weights:?} in degree {degree} is not a polynomial")]
    NonPolynomialPoincareSeries { weights: Vec<u64>, degree: u64 },

    #[error("invalid weight system: {0}")]
    InvalidWeightSystem(String),

    #[error("exponent {0} is smaller than 2")]
    InvalidExponent(u64),

    #[error("at least one exponent is required")]
    EmptyExponents,

    #[error("{count} variables exceed the supported limit of {limit}")]
    TooManyVariables { count: usize, limit: usize },

    #[error("the singularity is not canonical (sigma - k = {0})")]
    NotCanonical(i64),

    #[error("cone generators are linearly dependent")]
    DependentGenerators,

    #[error("invalid cone generator: {0}")]
    InvalidGenerator(String),

    #[error("a term has {0} denominator factors vanishing at T = uv")]
    HigherOrderPole(usize),

    #[error("denominator factor 1 - (uv)^{0} vanishes identically")]
    VanishingFactor(i64),

    #[error("non-integer discrepancy {0} is not supported")]
    NonGorensteinUnsupported(String),

    #[error("discrepancy {0} is not greater than -1")]
    InvalidDiscrepancy(String),

    #[error("operation requires resolution data in {expected} mode")]
    WrongMode { expected: &'static str },

    #[error("unknown component id `{0}`")]
    UnknownComponent(String),

    #[error("coefficient sign pattern violated at u^{i}*v^{j}")]
    SignViolation { i: u32, j: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonExactDivision => "NonExactDivision",
            Error::NotAPowerSeries { .. } => "NotAPowerSeries",
            Error::PoleAtOne => "PoleAtOne",
            Error::NonPolynomialPoincareSeries { .. } => "NonPolynomialPoincareSeries",
            Error::InvalidWeightSystem(_) => "InvalidWeightSystem",
            Error::InvalidExponent(_) => "InvalidExponent",
            Error::EmptyExponents => "EmptyExponents",
            Error::TooManyVariables { .. } => "TooManyVariables",
            Error::NotCanonical(_) => "NotCanonical",
            Error::DependentGenerators => "DependentGenerators",
            Error::InvalidGenerator(_) => "InvalidGenerator",
            Error::HigherOrderPole(_) => "HigherOrderPole",
            Error::VanishingFactor(_) => "VanishingFactor",
            Error::NonGorensteinUnsupported(_) => "NonGorensteinUnsupported",
            Error::InvalidDiscrepancy(_) => "InvalidDiscrepancy",
            Error::WrongMode { .. } => "WrongMode",
            Error::UnknownComponent(_) => "UnknownComponent",
            Error::SignViolation { .. } => "SignViolation",
            Error::Parse(_) => "Parse",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    /// True for errors caused by malformed input rather than by the mathematics.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidInput(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
