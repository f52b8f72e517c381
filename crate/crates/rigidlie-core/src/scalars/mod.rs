//! Exact scalar arithmetic over the field tower Q ⊂ Q(i), dense univariate
//! polynomials, Sturm real-root counting and in-field root extraction.

mod poly;
mod scalar;

pub use poly::{FieldRoots, Polynomial};
pub use scalar::{Field, Scalar};

use alloc::string::String;
use core::fmt;

/// Errors from scalar and polynomial operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarsError {
    /// Division or inversion of zero.
    DivisionByZero,
    /// The zero polynomial has no well-defined root count or squarefree part.
    ZeroPolynomial,
    /// Real-root counting requires rational coefficients.
    ComplexCoefficients,
    /// A scalar string failed to parse.
    Parse(String),
    /// Root finding needed to factor an integer beyond the trial-division bound.
    FactorizationOverflow,
}

impl fmt::Display for ScalarsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarsError::DivisionByZero => write!(f, "division by zero"),
            ScalarsError::ZeroPolynomial => write!(f, "indeterminate root count"),
            ScalarsError::ComplexCoefficients => {
                write!(f, "real-root counting requires rational coefficients")
            }
            ScalarsError::Parse(s) => write!(f, "invalid scalar literal: {s}"),
            ScalarsError::FactorizationOverflow => {
                write!(f, "integer factorization exceeded the trial-division bound")
            }
        }
    }
}

impl core::error::Error for ScalarsError {}
