use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("relation x{0} < x{0} relates an element to itself")]
    SelfRelation(usize),
    #[error("relations contain a cycle through x{0}")]
    Cyclic(usize),
    #[error("{0} is not an order ideal")]
    NotOrderIdeal(String),
    #[error("ambient mismatch: {left} variables vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined on the unit ideal")]
    UnitIdeal,
    #[error("monomial must not be 1")]
    UnitMonomial,
    #[error("monomial {0} is not square-free")]
    NotSquareFree(String),
    #[error("{divisor} does not divide {monomial}")]
    NotDivisible { divisor: String, monomial: String },
    #[error("invalid Borel move x{from} -> x{to}: target is not strictly below source")]
    InvalidMove { from: usize, to: usize },
    #[error("{target} is not a minimal generator of Q({source_monomial})")]
    TargetNotInIdeal {
        target: String,
        source_monomial: String,
    },
    #[error("ideal is not equigenerated")]
    NotEquigenerated,
    #[error("no divisor of {monomial} has order ideal {order_ideal}")]
    NoRealizingDivisor {
        monomial: String,
        order_ideal: String,
    },
    #[error("{0} must be a positive integer")]
    NonPositive(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
