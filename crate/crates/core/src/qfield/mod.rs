//! Exact arithmetic in `Q[q]` and `Q(q)`, where `q` stands for the class of
//! the affine line.

mod parse;
mod partition;
mod poly;
mod ratfunc;
mod spectrum;

pub use parse::{parse_polynomial, parse_rational_function};
pub use partition::{q_lambda, Partition};
pub use poly::PolynomialQ;
pub use ratfunc::RationalFunctionQ;
pub use spectrum::{spectrum_decompose, SpectrumDecomposition, SpectrumFamily};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QFieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("the zero polynomial has no spectrum decomposition")]
    ZeroPolynomial,
    #[error("polynomial {0} does not have integer coefficients")]
    NonIntegral(String),
}
