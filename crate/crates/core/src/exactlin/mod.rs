//! Exact scalar arithmetic and dense linear algebra over `Q` or `GF(p)`.
//!
//! Nothing in this module rounds: every equality test is a literal comparison
//! of canonical forms.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{sign, Field, Scalar};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("characteristic {0} is not supported (need 0 or a prime > 3)")]
    UnsupportedCharacteristic(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator is divisible by the characteristic {0}")]
    NonInvertibleDenominator(u64),
    #[error("scalar does not belong to the requested field")]
    FieldMismatch,
    #[error("not a number: {0:?}")]
    BadNumber(String),
}

/// `Σ coeffs[i] * vectors[i]` over vectors of length `len`.
pub fn linear_combination(field: Field, len: usize, coeffs: &[Scalar], vectors: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += &(c * x);
            }
        }
    }
    out
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
