//! Exact dense linear algebra over Q and Q(i): fraction-free elimination,
//! rank and nullspace, echelonized subspaces, characteristic and minimal
//! polynomials.

mod charmin;
mod elim;
mod matrix;
mod subspace;

pub use charmin::poly_eval_matrix;
pub use matrix::ExactMatrix;
pub use subspace::Subspace;

use alloc::vec::Vec;
use core::fmt;

use crate::scalars::Scalar;

/// Errors from matrix operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// The operation requires a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Operand shapes do not match.
    DimensionMismatch,
    /// Inversion of a singular matrix; carries a nonzero kernel vector.
    Singular { kernel_witness: Vec<Scalar> },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "operation requires a square matrix, got {rows}x{cols}")
            }
            LinalgError::DimensionMismatch => write!(f, "matrix dimension mismatch"),
            LinalgError::Singular { kernel_witness } => {
                write!(f, "singular matrix; kernel contains [")?;
                for (k, v) in kernel_witness.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl core::error::Error for LinalgError {}
