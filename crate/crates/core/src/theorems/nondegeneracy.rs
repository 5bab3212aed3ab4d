//! Whether commuting with every element of one grade forces an element to
//! vanish.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::algebra::{BladeIndex, Field, Multivector, Signature};
use crate::error::{CliffordError, Result};
use crate::representation::RANK_TOL;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelReport {
    pub signature: String,
    pub k: usize,
    /// Dimension of the space of admitted `V`.
    pub domain_dimension: usize,
    pub rank: usize,
    /// Dimension of `{V : [U, V] = 0 for all U of grade k}`.
    pub kernel_dimension: usize,
}

impl KernelReport {
    pub fn trivial_kernel(&self) -> bool {
        self.kernel_dimension == 0
    }
}

/// Kernel of `V -> ([U_i, V])_i` over the grade-`k` basis blades `U_i`, with
/// `V` ranging over the real span of `v_blades`.
pub fn commutator_kernel(sig: &Signature, k: usize, v_blades: &[BladeIndex]) -> Result<KernelReport> {
    let n = sig.n();
    if k > n {
        return Err(CliffordError::GradeOutOfRange { k, n });
    }
    let sig = sig.with_field(Field::Real);
    let us: Vec<Multivector> = BladeIndex::of_grade(n, k)
        .map(|b| Multivector::basis(sig, b))
        .collect();
    let dim = sig.dim();
    let mut m = DMatrix::<f64>::zeros(us.len() * dim, v_blades.len());
    for (col, vb) in v_blades.iter().enumerate() {
        let v = Multivector::basis(sig, *vb);
        for (i, u) in us.iter().enumerate() {
            let c = u.commutator(&v)?;
            for (j, x) in c.coeffs().iter().enumerate() {
                m[(i * dim + j, col)] = x.re;
            }
        }
    }
    let rank = if v_blades.is_empty() { 0 } else { m.rank(RANK_TOL) };
    Ok(KernelReport {
        signature: sig.to_string(),
        k,
        domain_dimension: v_blades.len(),
        rank,
        kernel_dimension: v_blades.len() - rank,
    })
}

/// Kernel on the grade-2 subspace for `1 <= k <= n - 1`.
pub fn grade2_nondegeneracy(sig: &Signature, k: usize) -> Result<KernelReport> {
    let n = sig.n();
    if k == 0 || k + 1 > n {
        return Err(CliffordError::GradeOutOfRange { k, n });
    }
    let blades: Vec<BladeIndex> = BladeIndex::of_grade(n, 2).collect();
    commutator_kernel(sig, k, &blades)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grade_two_examples() {
        let r = grade2_nondegeneracy(&Signature::real(3, 0).unwrap(), 1).unwrap();
        assert_eq!((r.domain_dimension, r.kernel_dimension), (3, 0));
        let r = grade2_nondegeneracy(&Signature::real(1, 3).unwrap(), 2).unwrap();
        assert!(r.trivial_kernel());
        assert!(grade2_nondegeneracy(&Signature::real(2, 0).unwrap(), 2).is_err());
    }

    #[test]
    fn admitting_the_unit_gives_a_kernel() {
        let s = Signature::real(2, 0).unwrap();
        let mut blades: Vec<BladeIndex> = BladeIndex::of_grade(2, 2).collect();
        blades.push(BladeIndex::SCALAR);
        let r = commutator_kernel(&s, 1, &blades).unwrap();
        assert_eq!(r.kernel_dimension, 1);
    }
}
