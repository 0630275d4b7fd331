//! Exact multivariate polynomial arithmetic over a field.

mod field;
mod monomial;
mod poly;
mod ring;

pub use field::{is_prime, Coeff, Field};
pub use monomial::{MonomialOrder, PowerProduct};
pub use poly::{divide, normal_form, Polynomial, Term};
pub use ring::Ring;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("power products have different lengths ({left} vs {right})")]
    Dimension { left: usize, right: usize },
    #[error("power product is not divisible by the divisor")]
    NotDivisible,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("variable names must be non-empty")]
    EmptyVariableName,
    #[error("ring needs at least one variable")]
    NoVariables,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("coefficient {0} does not belong to the ring's field")]
    ForeignCoefficient(String),
}
