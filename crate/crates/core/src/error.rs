use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid extension degree {0}")]
    InvalidDegree(usize),
    #[error("field order {p}^{e} does not fit the supported range")]
    FieldTooLarge { p: u32, e: usize },
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    BadModulus(usize),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("coefficient {value} out of range for GF({p})")]
    CoefficientRange { value: u64, p: u32 },
    #[error("{t} does not divide extension degree {s}")]
    NotDivisor { t: usize, s: usize },
    #[error("enumeration of {needed} elements exceeds bound {bound}")]
    EnumerationBound { needed: u64, bound: u64 },
    #[error("cyclotomic orders {0} and {1} are incompatible")]
    OrderMismatch(u64, u64),
    #[error("cyclotomic order {0} exceeds the supported bound")]
    OrderTooLarge(u64),
    #[error("division by {0} is not available in this ring")]
    NoDivision(i64),
    #[error("polynomial degree {degree} exceeds bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("root finder did not converge (residual {residual:e})")]
    NoConvergence { residual: f64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}
