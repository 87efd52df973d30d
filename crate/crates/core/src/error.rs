use thiserror::Error;

use crate::ring::RingSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    #[error("{value} is not a unit in {ring}")]
    NotUnit { value: String, ring: RingSpec },

    #[error("polynomial {0} is not monic")]
    NotMonic(String),

    #[error("polynomial {0} is not reversible; split off the x-power part first (gamma/decompose)")]
    NotReversible(String),

    #[error("polynomial {0} must have degree at least 1")]
    ConstantPolynomial(String),

    #[error("initial vector has {got} values, characteristic polynomial of degree {expected} needs {expected}")]
    InitLength { expected: usize, got: usize },

    #[error("value dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),

    #[error("operation needs scalar (dim 1) sequences, got dim {0}")]
    NotScalar(usize),

    #[error("matrix shape error: {0}")]
    Shape(String),

    #[error("{what} is not supported over {ring}")]
    UnsupportedRing { ring: RingSpec, what: &'static str },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}
