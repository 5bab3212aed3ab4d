//! Executable forms of the structural results on brackets, conjugation and
//! reconstruction.

pub mod bracket_table;
pub mod grade_support;
pub mod hermitian_forms;
pub mod nondegeneracy;
pub mod reconstruction;
pub mod structure;

pub use grade_support::{check_support, predicted_support, Bracket, GradeSupport};
pub use nondegeneracy::grade2_nondegeneracy;
pub use reconstruction::{solve_commutator_system, Reconstruction};
