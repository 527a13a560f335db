use thiserror::Error;

/// Errors produced by the algebra and code-construction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NonPrime(u64),
    #[error("modulus is not monic of degree {0}")]
    BadModulus(usize),
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("twist t = {t} does not divide m = {m}")]
    BadTwist { t: usize, m: usize },
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("element encoding {0} is out of range")]
    BadElement(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("polynomials belong to different rings")]
    MixedRings,
    #[error("leading coefficient of the divisor is not a unit")]
    NonUnitLeadingCoeff,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("the zero polynomial has no dual generator")]
    ZeroPolynomial,
    #[error("search needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("generator of component {0} does not right-divide its modulus")]
    NotADivisor(usize),
    #[error("generator of component {0} is not monic")]
    NotMonic(usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("block parameter {0} does not divide the vector length")]
    BadIndex(usize),
    #[error("length must be odd")]
    EvenLength,
    #[error("inconsistent component data: {0}")]
    Inconsistent(String),
    #[error("code has no nonzero codeword")]
    ZeroCode,
}

pub type Result<T> = std::result::Result<T, Error>;
