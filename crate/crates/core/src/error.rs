use thiserror::Error;

/// Errors raised by the algebra, combinatorics and basis-change layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coefficient denominator vanishes at the requested specialization")]
    PoleAtSpecialization,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("operation requires a composition of positive size")]
    ZeroComposition,
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<u32>),
    #[error("tail {0:?} of the label is not a partition")]
    TailNotPartition(Vec<u32>),
    #[error("polynomial is not in the span of the requested basis ({residual_terms} residual terms)")]
    NotInSpan { residual_terms: usize },
    #[error("singular or inconsistent linear system: {0}")]
    SingularSystem(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("{n} variables are too few for degree {degree}")]
    TooFewVariables { n: usize, degree: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
