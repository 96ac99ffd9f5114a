use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("syntax error at byte {position}: expected one of {}", expected.join(", "))]
    SyntaxError { position: usize, expected: Vec<String> },

    #[error("bad variable index at byte {position}")]
    BadVariableIndex { position: usize },

    #[error("zero denominator at byte {position}")]
    ZeroDenominator { position: usize },

    #[error("exponent {exponent} at byte {position} exceeds cap {cap}")]
    ExponentOverflow { position: usize, exponent: String, cap: u32 },

    #[error("system has no polynomials")]
    EmptySystem,

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant term is zero")]
    NonUnitConstantTerm,

    #[error("coefficient index {index} outside 0..={order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("extracted count {0} is negative")]
    NegativeCount(String),

    #[error("extracted count {0} is not an integer")]
    NonIntegralCount(String),

    #[error("linear form has a term of degree other than one")]
    NotLinear,

    #[error("linear form involves x{index}, outside the base variables")]
    VariableLeak { index: usize },

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("no member of the system is eventually positive along the curve")]
    NotEventuallyPositive,

    #[error("minimum {value:e} at radius {radius:e} is not positive")]
    NonPositiveMin { radius: f64, value: f64 },

    #[error("at least 3 records are needed for the fit, got {0}")]
    TooFewPoints(usize),

    #[error("radii are not distinct")]
    DegenerateRadii,

    #[error("hypothesis violated: minimum {value:e} <= 0 on the cube of radius {radius:e}")]
    HypothesisViolated { radius: f64, value: f64, argmin: Vec<f64> },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VariableCountMismatch { .. } => "VariableCountMismatch",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::BadVariableIndex { .. } => "BadVariableIndex",
            Error::ZeroDenominator { .. } => "ZeroDenominator",
            Error::ExponentOverflow { .. } => "ExponentOverflow",
            Error::EmptySystem => "EmptySystem",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::NonUnitConstantTerm => "NonUnitConstantTerm",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DomainError(_) => "DomainError",
            Error::NegativeCount(_) => "NegativeCount",
            Error::NonIntegralCount(_) => "NonIntegralCount",
            Error::NotLinear => "NotLinear",
            Error::VariableLeak { .. } => "VariableLeak",
            Error::InvalidCurve(_) => "InvalidCurve",
            Error::NotEventuallyPositive => "NotEventuallyPositive",
            Error::NonPositiveMin { .. } => "NonPositiveMin",
            Error::TooFewPoints(_) => "TooFewPoints",
            Error::DegenerateRadii => "DegenerateRadii",
            Error::HypothesisViolated { .. } => "HypothesisViolated",
            Error::InvalidConfig(_) => "InvalidConfig",
        }
    }

    /// Byte offset for parse errors.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::SyntaxError { position, .. }
            | Error::BadVariableIndex { position }
            | Error::ZeroDenominator { position }
            | Error::ExponentOverflow { position, .. } => Some(*position),
            _ => None,
        }
    }

    pub(crate) fn shift_position(self, offset: usize) -> Self {
        match self {
            Error::SyntaxError { position, expected } => {
                Error::SyntaxError { position: position + offset, expected }
            }
            Error::BadVariableIndex { position } => Error::BadVariableIndex { position: position + offset },
            Error::ZeroDenominator { position } => Error::ZeroDenominator { position: position + offset },
            Error::ExponentOverflow { position, exponent, cap } => {
                Error::ExponentOverflow { position: position + offset, exponent, cap }
            }
            other => other,
        }
    }
}
