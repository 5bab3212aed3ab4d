//! Recovering `B` from the commutators `C^a = [B, e^a]`.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{BladeIndex, Multivector, Signature};
use crate::error::{CliffordError, Result};

/// `B` with its undetermined central part split off. `B + alpha e`
/// (and `+ beta l` for odd `n`) solves the same system for any `alpha`,
/// `beta`; both are reported as zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reconstruction {
    pub b: Multivector,
    pub alpha: Complex64,
    /// Present for odd `n` only.
    pub beta: Option<Complex64>,
    /// `max_a |[B, e^a] - C^a|`.
    pub residual: f64,
}

/// `n + (-1)^{k+1} (n - 2k)`: `2k` for even `k`, `2(n - k)` for odd `k`.
pub fn denominator(n: usize, k: usize) -> usize {
    if k % 2 == 0 {
        2 * k
    } else {
        2 * (n - k)
    }
}

/// Grades of `B` determined by the commutators.
pub fn determined_grades(n: usize) -> std::ops::RangeInclusive<usize> {
    if n % 2 == 0 {
        1..=n
    } else {
        1..=n - 1
    }
}

/// `B = sum_k <C^a e_a>_k / (n + (-1)^{k+1}(n - 2k))` over the determined
/// grades. Fails if some `Tr C^a` is non-zero or if `[B, e^a]` does not
/// reproduce `C^a` within `eps`.
pub fn solve_commutator_system(
    c: &[Multivector],
    sig: &Signature,
    eps: f64,
) -> Result<Reconstruction> {
    let n = sig.n();
    if c.len() != n {
        return Err(CliffordError::DimensionMismatch(n, c.len()));
    }
    let mut contracted = Multivector::zero(*sig);
    for (i, ca) in c.iter().enumerate() {
        let a = i + 1;
        if ca.signature() != *sig {
            return Err(CliffordError::SignatureMismatch {
                left: *sig,
                right: ca.signature(),
            });
        }
        if ca.trace().norm() > eps {
            return Err(CliffordError::NonZeroTrace {
                generator: a,
                trace: ca.trace(),
            });
        }
        let lowered = Multivector::lowered_generator(*sig, a)?;
        contracted += ca * &lowered;
    }
    let mut b = Multivector::zero(*sig);
    for m in 0..sig.dim() as u32 {
        let k = m.count_ones() as usize;
        if determined_grades(n).contains(&k) {
            let blade = BladeIndex(m);
            b.set_coeff(blade, contracted.coeff(blade) / denominator(n, k) as f64);
        }
    }
    let mut residual: f64 = 0.0;
    for (i, ca) in c.iter().enumerate() {
        let e = Multivector::generator(*sig, i + 1)?;
        residual = residual.max(b.commutator(&e)?.max_abs_diff(ca));
    }
    if residual > eps {
        return Err(CliffordError::InconsistentSystem(residual));
    }
    Ok(Reconstruction {
        b,
        alpha: Complex64::new(0.0, 0.0),
        beta: (n % 2 == 1).then_some(Complex64::new(0.0, 0.0)),
        residual,
    })
}

/// `C^a = [B, e^a]`, `a = 1..=n`.
pub fn commutators_with_generators(b: &Multivector) -> Vec<Multivector> {
    let sig = b.signature();
    (1..=sig.n())
        .map(|a| {
            let e = Multivector::generator(sig, a).expect("generator index in range");
            b.commutator(&e).expect("same signature")
        })
        .collect()
}

/// The part of `B` the system cannot see: scalar, plus the volume element
/// for odd `n`.
pub fn central_part(b: &Multivector) -> Multivector {
    let sig = b.signature();
    let full = sig.full_mask();
    let odd = sig.n() % 2 == 1;
    b.filter_blades(|x| x.mask() == 0 || (odd && x.mask() == full))
}
