//! Unitary elements `U^dagger U = e` and the basis changes they induce.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::algebra::{BladeIndex, Multivector, Signature};
use crate::error::{CliffordError, Result};
use crate::ideals::{preset_ideal_basis, IdealBasis, Preset};
use crate::involutions::dagger;
use crate::random::random_multivector;
use crate::representation::{Representation, RANK_TOL};

/// `max |U^dagger U - e|`.
pub fn unitarity_residual(u: &Multivector) -> f64 {
    (&dagger(u) * u).max_abs_diff(&Multivector::one(u.signature()))
}

pub fn is_unitary(u: &Multivector, eps: f64) -> bool {
    unitarity_residual(u) <= eps
}

/// A multivector checked to be unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryElement(Multivector);

impl UnitaryElement {
    pub fn new(u: Multivector, eps: f64) -> Result<Self> {
        let r = unitarity_residual(&u);
        if r > eps {
            return Err(CliffordError::NotUnitary(r));
        }
        Ok(UnitaryElement(u))
    }

    pub fn get(&self) -> &Multivector {
        &self.0
    }

    /// `U^{-1} = U^dagger`.
    pub fn inverse(&self) -> Multivector {
        dagger(&self.0)
    }
}

/// `exp(A)` by power series with scaling and squaring. Terms are summed until
/// their norm drops below `1e-15`.
pub fn exp(a: &Multivector) -> Multivector {
    let sig = a.signature();
    let norm = a.norm();
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let x = a.scale(scale);
    let mut sum = Multivector::one(sig);
    let mut term = Multivector::one(sig);
    for k in 1..200 {
        term = (&term * &x).scale(1.0 / k as f64);
        sum += term.clone();
        if term.norm() < 1e-15 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// `exp(A)` for a random antiHermitian `A = (X - X^dagger)/2`.
pub fn random_unitary(sig: Signature, rng: &mut impl Rng) -> Multivector {
    let sig = sig.with_field(crate::Field::Complex);
    let x = random_multivector(sig, rng);
    let a = (&x - &dagger(&x)) * 0.5;
    exp(&a)
}

/// Representations obtained from an orthonormal basis by a unitary `U`:
/// `hat` uses `U tau_k`, `check` uses `tau_k U^{-1}` (an ideal of
/// `U t U^{-1}`), `hathat` uses `U tau_k U^{-1}`.
#[derive(Debug, Clone)]
pub struct ConjugatedBases {
    pub hat: Representation,
    pub check: Representation,
    pub hathat: Representation,
}

pub fn conjugated_bases(rep: &Representation, u: &UnitaryElement) -> Result<ConjugatedBases> {
    let basis = rep.basis();
    basis.t.ensure_same(u.get())?;
    let uu = u.get();
    let inv = u.inverse();
    let make = |t: Multivector, taus: Vec<Multivector>, label: &str| -> Result<Representation> {
        Ok(Representation::new(IdealBasis::new(
            t,
            taus,
            format!("{}-{label}", basis.preset),
        )?))
    };
    let hat = make(
        basis.t.clone(),
        basis.taus.iter().map(|x| uu * x).collect(),
        "hat",
    )?;
    let t_conj = &(uu * &basis.t) * &inv;
    let check = make(
        t_conj.clone(),
        basis.taus.iter().map(|x| x * &inv).collect(),
        "check",
    )?;
    let hathat = make(
        t_conj,
        basis.taus.iter().map(|x| &(uu * x) * &inv).collect(),
        "hathat",
    )?;
    Ok(ConjugatedBases { hat, check, hathat })
}

/// Largest deviations of the three basis-change relations for one `V`:
/// `hat(V) = g(U)^{-1} g(V) g(U)`, `check(V) = g(V)`,
/// `hathat(V) = g(U^{-1}) g(V) g(U)`.
pub fn basis_change_residuals(
    rep: &Representation,
    bases: &ConjugatedBases,
    u: &UnitaryElement,
    v: &Multivector,
) -> Result<[f64; 3]> {
    let gu = rep.gamma(u.get())?;
    let gu_inv = gu.inverse()?;
    let gv = rep.gamma(v)?;
    let g_uinv = rep.gamma(&u.inverse())?;
    let hat = (&(&gu_inv * &gv) * &gu).max_abs_diff(&bases.hat.gamma(v)?);
    let check = gv.max_abs_diff(&bases.check.gamma(v)?);
    let hathat = (&(&g_uinv * &gv) * &gu).max_abs_diff(&bases.hathat.gamma(v)?);
    Ok([hat, check, hathat])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupDimensionReport {
    pub signature: String,
    /// Real dimension of `{A : A^dagger = -A}`.
    pub antihermitian_dimension: usize,
    pub expected_dimension: usize,
    /// Largest `|g(U)^dagger g(U) - 1|` over the samples.
    pub max_unitarity_residual: f64,
    /// Largest off-block entry for odd `n`; zero for even `n`.
    pub max_off_block: f64,
    pub samples: usize,
    pub passed: bool,
}

/// Real dimension of the antiHermitian subspace: the kernel of
/// `U -> U + U^dagger` acting on the `2^{n+1}`-dimensional real space.
pub fn antihermitian_dimension(sig: &Signature) -> usize {
    let dim = sig.dim();
    let mut m = DMatrix::<f64>::zeros(2 * dim, 2 * dim);
    for col in 0..2 * dim {
        let blade = BladeIndex((col % dim) as u32);
        let c = if col < dim {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 1.0)
        };
        let u = Multivector::basis(*sig, blade).scale(c);
        let img = &u + &dagger(&u);
        for (row, x) in img.coeffs().iter().enumerate() {
            m[(row, col)] = x.re;
            m[(row + dim, col)] = x.im;
        }
    }
    2 * dim - m.rank(RANK_TOL)
}

/// Samples unitary elements and checks that their images are unitary, of
/// size `2^{n/2}` for even `n` and two unitary diagonal blocks of size
/// `2^{(n-1)/2}` for odd `n` (with the `paper` basis, or `block` beyond it).
pub fn group_dimension_check(
    sig: &Signature,
    samples: usize,
    rng: &mut impl Rng,
    eps: f64,
) -> Result<GroupDimensionReport> {
    let sig = sig.with_field(crate::Field::Complex);
    let n = sig.n();
    let preset = if n % 2 == 0 {
        Preset::Standard
    } else if Preset::Paper.supports(&sig) {
        Preset::Paper
    } else {
        Preset::Block
    };
    let rep = Representation::new(preset_ideal_basis(&sig, preset)?);
    let d = rep.dim();
    let expected_dimension = if n % 2 == 0 { d * d } else { 2 * (d / 2) * (d / 2) };
    let antihermitian_dimension = antihermitian_dimension(&sig);

    let mut max_unitarity_residual: f64 = 0.0;
    let mut max_off_block: f64 = 0.0;
    let mut size_ok = true;
    for _ in 0..samples {
        let u = random_unitary(sig, rng);
        let g = rep.gamma(&u)?;
        size_ok &= g.dim() == if n % 2 == 0 { 1 << (n / 2) } else { 2 << ((n - 1) / 2) };
        if n % 2 == 1 {
            max_off_block = max_off_block.max(g.off_block_max());
            for upper in [true, false] {
                max_unitarity_residual =
                    max_unitarity_residual.max(g.diagonal_block(upper).unitarity_residual());
            }
        } else {
            max_unitarity_residual = max_unitarity_residual.max(g.unitarity_residual());
        }
    }
    let passed = size_ok
        && antihermitian_dimension == expected_dimension
        && max_unitarity_residual <= eps
        && max_off_block <= eps;
    Ok(GroupDimensionReport {
        signature: sig.to_string(),
        antihermitian_dimension,
        expected_dimension,
        max_unitarity_residual,
        max_off_block,
        samples,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::standard_ideal_basis;
    use crate::random::rng_from_seed;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::complex(p, q).unwrap()
    }

    #[test]
    fn unitary_examples() {
        let s = sig(2, 0);
        assert!(is_unitary(&Multivector::one(s), 1e-9));
        assert!(is_unitary(&Multivector::generator(s, 1).unwrap(), 1e-9));
        assert!(!is_unitary(&Multivector::scalar(s, 2.0), 1e-9));
        assert!(UnitaryElement::new(Multivector::scalar(s, 2.0), 1e-9).is_err());
    }

    #[test]
    fn exp_examples() {
        let s = sig(1, 2);
        assert_eq!(exp(&Multivector::zero(s)), Multivector::one(s));
        let a = Multivector::scalar(s, Complex64::new(0.0, std::f64::consts::PI));
        let u = exp(&a);
        assert!(u.approx_eq(&Multivector::scalar(s, -1.0), 1e-12));
        assert!(is_unitary(&u, 1e-12));
    }

    #[test]
    fn random_unitaries_are_unitary() {
        let mut rng = rng_from_seed(3);
        for (p, q) in [(1, 0), (2, 0), (1, 3), (2, 3), (3, 3)] {
            let u = random_unitary(sig(p, q), &mut rng);
            assert!(unitarity_residual(&u) < 1e-10, "({p},{q})");
        }
    }

    #[test]
    fn identity_leaves_bases_unchanged() {
        let s = sig(2, 2);
        let rep = Representation::new(standard_ideal_basis(&s).unwrap());
        let e = UnitaryElement::new(Multivector::one(s), 1e-9).unwrap();
        let b = conjugated_bases(&rep, &e).unwrap();
        for r in [&b.hat, &b.check, &b.hathat] {
            assert_eq!(r.basis().taus, rep.basis().taus);
        }
    }

    #[test]
    fn antihermitian_dimensions() {
        assert_eq!(antihermitian_dimension(&sig(2, 0)), 4);
        assert_eq!(antihermitian_dimension(&sig(3, 0)), 8);
        assert_eq!(antihermitian_dimension(&sig(1, 3)), 16);
    }

    #[test]
    fn dimension_check_small() {
        let mut rng = rng_from_seed(5);
        for (p, q) in [(1, 3), (3, 0), (0, 5)] {
            let r = group_dimension_check(&sig(p, q), 5, &mut rng, 1e-8).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }
}
