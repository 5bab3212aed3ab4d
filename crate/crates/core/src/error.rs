use thiserror::Error;

use crate::algebra::Signature;

/// Errors produced by algebra, representation and verification routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliffordError {
    #[error("invalid signature ({p},{q}): {reason}")]
    InvalidSignature { p: usize, q: usize, reason: String },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("blade indices must be strictly increasing, got {0:?}")]
    NonIncreasingIndices(Vec<usize>),

    #[error("grade {k} out of range 0..={n}")]
    GradeOutOfRange { k: usize, n: usize },

    #[error("expected a homogeneous element{}, found grades {found:?}", expected.map(|k| format!(" of grade {k}")).unwrap_or_default())]
    NotHomogeneous { expected: Option<usize>, found: Vec<usize> },

    #[error("coefficient vector has length {found}, expected {expected}")]
    CoefficientLength { expected: usize, found: usize },

    #[error("real-field element has a non-zero imaginary part ({0:e})")]
    ComplexCoefficientInRealField(f64),

    #[error("operation requires the complex field")]
    RequiresComplexField,

    #[error("element is not in the left ideal (residual {0:e})")]
    NotInIdeal(f64),

    #[error("element is not in the corner subalgebra tUt (residual {0:e})")]
    NotInCorner(f64),

    #[error("element is not unitary (residual {0:e})")]
    NotUnitary(f64),

    #[error("commutator data has non-zero trace for generator {generator} ({trace})")]
    NonZeroTrace { generator: usize, trace: num_complex::Complex64 },

    #[error("commutator system is inconsistent (residual {0:e})")]
    InconsistentSystem(f64),

    #[error("no preset `{preset}` for signature ({p},{q})")]
    UnknownPreset { preset: String, p: usize, q: usize },

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is singular")]
    Singular,

    #[error("eigenvalue iteration did not converge after {0} iterations")]
    NoConvergence(usize),

    #[error("left eigen-element must be non-zero")]
    ZeroEigenElement,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = CliffordError> = std::result::Result<T, E>;
