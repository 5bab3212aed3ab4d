//! Clifford algebras `Cl(p, q)` over the real and complex numbers.
//!
//! Multivectors are dense coefficient vectors over the canonical blade basis.
//! On top of the algebra sit the conjugations and Hermitian scalar product,
//! Hermitian idempotents with orthonormal left-ideal bases, and the matrix
//! representations those bases induce.

pub mod algebra;
pub mod error;
pub mod golden;
pub mod hodge;
pub mod ideals;
pub mod involutions;
pub mod json;
pub mod linalg;
pub mod random;
pub mod representation;
pub mod theorems;
pub mod unitary;
pub mod verify;

pub use algebra::{BladeIndex, Field, Multivector, Signature, N_MAX};
pub use error::{CliffordError, Result};
pub use hodge::{com_bracket, hodge_star};
pub use involutions::{
    clifford_conjugate, complex_conjugate, dagger, grade_involution, hermitian_split, reversion,
    scalar_product, ConjugationKind,
};
pub use ideals::{
    in_corner, in_ideal, is_hermitian_idempotent, preset_ideal_basis, q_basis,
    standard_ideal_basis, standard_idempotent, IdealBasis, Preset,
};
pub use linalg::ComplexMatrix;
pub use representation::Representation;

/// Default absolute tolerance for floating-point comparisons.
pub const DEFAULT_EPS: f64 = 1e-9;
