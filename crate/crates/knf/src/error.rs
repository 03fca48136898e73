use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over its base field")]
    Reducible,
    #[error("field towers deeper than F_p -> F_q -> F_q^n are not supported")]
    TowerTooDeep,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element is outside this operation's domain")]
    ZeroElement,
    #[error("computation exceeds the configured bound ({0})")]
    BoundExceeded(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("k = {0} is out of range for degree {1}")]
    OutOfRange(usize, usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial does not divide x^n - 1")]
    NotADivisor,
    #[error("k-normality methods disagree: gcd={k_gcd}, order={k_order}, schwartz={k_schwartz}")]
    MethodDisagreement {
        k_gcd: usize,
        k_order: usize,
        k_schwartz: usize,
    },
    #[error("operation requires characteristic 2")]
    WrongCharacteristic,
    #[error("delta must be nonzero")]
    ZeroDelta,
    #[error("n must be even")]
    OddDegree,
    #[error("seed candidate fails its hypothesis: {0}")]
    InvalidSeed(String),
    #[error("chain verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
