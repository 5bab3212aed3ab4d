//! Multivector data model and the bilinear operations of `Cl(p, q)`.

mod blade;
mod multivector;
mod signature;

pub use blade::{blade_product, permutation_sign, reorder_sign, BladeIndex};
pub use multivector::Multivector;
pub use signature::{Field, Signature, N_MAX};
