//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by ideal arithmetic, complex construction and the
/// homology engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right} variables")]
    RingMismatch { left: usize, right: usize },

    #[error("unit ideal not supported")]
    UnitIdeal,

    #[error("ring needs at least one variable")]
    EmptyRing,

    #[error("variable index {index} out of range 1..={num_vars}")]
    VariableOutOfRange { index: usize, num_vars: usize },

    #[error("power too large: {raw} raw products exceed cap {cap}")]
    PowerTooLarge { raw: usize, cap: usize },

    #[error("polarization too large: {required} variables exceed cap {cap}")]
    PolarizationTooLarge { required: usize, cap: usize },

    #[error("ideal is not squarefree: polarize first")]
    NotSquarefree,

    #[error("subset sweep needs {required} subsets, cap is {cap}: raise the cap or use a targeted query")]
    SubsetCapExceeded { required: u128, cap: u128 },

    #[error("zero ideal has no {0}")]
    ZeroIdeal(&'static str),

    #[error("field GF({0}) is not available; supported: GF(2), GF(3), GF(5), GF(7), GF(11), GF(13), Q")]
    UnsupportedField(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("path enumeration exceeded {0} partial sequences")]
    PathEnumerationCap(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
