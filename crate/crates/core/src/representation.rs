//! Matrix representation `gamma`, antirepresentation `theta` and coordinate
//! map `rho` induced by an orthonormal basis of a left ideal.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{BladeIndex, Multivector};
use crate::error::{CliffordError, Result};
use crate::ideals::{ideal_dimension, IdealBasis};
use crate::involutions::{dagger, norm, scalar_product_unchecked};
use crate::linalg::ComplexMatrix;

/// Singular-value cutoff for rank decisions.
pub const RANK_TOL: f64 = 1e-8;

/// Representation on `I(t)` with cached generator images.
#[derive(Debug, Clone)]
pub struct Representation {
    basis: IdealBasis,
    generators: Vec<ComplexMatrix>,
}

impl Representation {
    pub fn new(basis: IdealBasis) -> Self {
        let sig = basis.signature;
        let generators = (1..=sig.n())
            .map(|a| gamma_on(&basis, &Multivector::basis(sig, BladeIndex(1 << (a - 1)))))
            .collect();
        Representation { basis, generators }
    }

    pub fn basis(&self) -> &IdealBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Cached `gamma(e^a)`, `a = 1..=n`.
    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    /// `gamma(U)[k][i] = (tau_k, U tau_i)`.
    pub fn gamma(&self, u: &Multivector) -> Result<ComplexMatrix> {
        self.basis.t.ensure_same(u)?;
        Ok(gamma_on(&self.basis, u))
    }

    /// Coordinates of `Omega` in the `tau` basis.
    pub fn rho(&self, omega: &Multivector, eps: f64) -> Result<Vec<Complex64>> {
        let (coords, residual) = self.basis.coordinates(omega)?;
        if residual > eps {
            return Err(CliffordError::NotInIdeal(residual));
        }
        Ok(coords)
    }

    /// `theta(V)[k][m] = (tau_k, tau_m V)` for `V` in the corner `tVt`.
    pub fn theta(&self, v: &Multivector, eps: f64) -> Result<ComplexMatrix> {
        let t = &self.basis.t;
        t.ensure_same(v)?;
        let residual = (&(t * v) * t).max_abs_diff(v);
        if residual > eps {
            return Err(CliffordError::NotInCorner(residual));
        }
        let images: Vec<Multivector> = self.basis.taus.iter().map(|tau| tau * v).collect();
        Ok(ComplexMatrix::from_fn(self.dim(), |k, m| {
            scalar_product_unchecked(&self.basis.taus[k], &images[m])
        }))
    }

    /// Matrix of left multiplication by `U` in the `tau` basis,
    /// `U tau_i = sum_k A[k][i] tau_k`, obtained as `G^{-1} M` from the Gram
    /// matrix `G` and the inner products `M = gamma(U)`. Agrees with `gamma`
    /// for orthonormal bases and stays a homomorphism for any basis.
    pub fn action_matrix(&self, u: &Multivector) -> Result<ComplexMatrix> {
        let g_inv = self.basis.gram().inverse()?;
        Ok(&g_inv * &self.gamma(u)?)
    }

    /// Checks the dimension and `A(U^dagger) = A(U)^dagger` on every basis
    /// blade, `A` being the action matrix. For an orthonormal basis `A` is
    /// `gamma`.
    pub fn is_normal(&self, eps: f64) -> NormalityReport {
        let sig = self.basis.signature;
        let orthonormal = self.basis.orthonormality_residual() <= eps;
        let g_inv = if orthonormal {
            None
        } else {
            self.basis.gram().inverse().ok()
        };
        let act = |u: &Multivector| {
            let m = gamma_on(&self.basis, u);
            match &g_inv {
                Some(gi) => gi * &m,
                None => m,
            }
        };
        let mut failures = Vec::new();
        let mut max_residual: f64 = 0.0;
        let singular_gram = !orthonormal && g_inv.is_none();
        if !singular_gram {
            for m in 0..sig.dim() as u32 {
                let u = Multivector::basis(sig, BladeIndex(m));
                let r = act(&dagger(&u)).max_abs_diff(&act(&u).adjoint());
                max_residual = max_residual.max(r);
                if r > eps {
                    failures.push((BladeIndex(m).to_string(), r));
                }
            }
        }
        let dimension_ok = self.dim() == ideal_dimension(sig.n());
        NormalityReport {
            normal: dimension_ok && !singular_gram && failures.is_empty(),
            dimension_ok,
            orthonormal,
            max_residual,
            failures,
        }
    }

    pub fn determinant(&self, u: &Multivector) -> Result<Complex64> {
        Ok(self.gamma(u)?.determinant())
    }

    /// Eigenvalues of `gamma(U)` with multiplicity, sorted by real then
    /// imaginary part.
    pub fn spectrum(&self, u: &Multivector, eps: f64) -> Result<Vec<Complex64>> {
        self.gamma(u)?.eigenvalues(eps)
    }

    /// Whether `V` is a left eigen-element: `(U - lambda e) V = 0`.
    pub fn left_eigen_check(
        &self,
        u: &Multivector,
        lambda: Complex64,
        v: &Multivector,
        eps: f64,
    ) -> Result<LeftEigenReport> {
        u.ensure_same(v)?;
        let v_norm = norm(v);
        if v_norm <= eps {
            return Err(CliffordError::ZeroEigenElement);
        }
        let shifted = u - &Multivector::scalar(u.signature(), lambda);
        let residual = norm(&(&shifted * v));
        let g = self.gamma(&shifted)?;
        let proper_ideal = g.rank(RANK_TOL) < g.dim();
        Ok(LeftEigenReport {
            is_eigen: residual <= eps * v_norm,
            residual,
            proper_ideal,
        })
    }
}

fn gamma_on(basis: &IdealBasis, u: &Multivector) -> ComplexMatrix {
    let images: Vec<Multivector> = basis.taus.iter().map(|tau| u * tau).collect();
    ComplexMatrix::from_fn(basis.dim(), |k, i| {
        scalar_product_unchecked(&basis.taus[k], &images[i])
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalityReport {
    pub normal: bool,
    pub dimension_ok: bool,
    pub orthonormal: bool,
    pub max_residual: f64,
    /// Blades on which `gamma(U^dagger)` and `gamma(U)^dagger` differ.
    pub failures: Vec<(String, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeftEigenReport {
    pub is_eigen: bool,
    /// `|(U - lambda e) V|`.
    pub residual: f64,
    /// `gamma(U - lambda e)` is singular, so the generated left ideal is proper.
    pub proper_ideal: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::ideals::{preset_ideal_basis, standard_ideal_basis, Preset};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rep(p: usize, q: usize) -> Representation {
        Representation::new(standard_ideal_basis(&Signature::complex(p, q).unwrap()).unwrap())
    }

    #[test]
    fn generator_images_for_two_generators() {
        let r = rep(2, 0);
        let want = ComplexMatrix::diagonal(&[c(1., 0.), c(-1., 0.)]);
        assert!(r.generators()[0].approx_eq(&want, 1e-12));
        let r = rep(0, 2);
        let want = ComplexMatrix::diagonal(&[c(0., -1.), c(0., 1.)]);
        assert!(r.generators()[0].approx_eq(&want, 1e-12));
    }

    #[test]
    fn unit_maps_to_identity() {
        let r = rep(1, 3);
        let one = Multivector::one(r.basis().signature);
        assert!(r.gamma(&one).unwrap().approx_eq(&ComplexMatrix::identity(4), 1e-12));
    }

    #[test]
    fn rho_examples() {
        let r = rep(2, 1);
        let s = r.basis().signature;
        for k in 0..r.dim() {
            let col = r.rho(&r.basis().taus[k], 1e-9).unwrap();
            for (j, x) in col.iter().enumerate() {
                let want = if j == k { 1.0 } else { 0.0 };
                assert!((x - c(want, 0.)).norm() < 1e-12);
            }
        }
        let omega = r.basis().taus[0].scale(2.0) + r.basis().taus[1].scale(c(0., 1.));
        let col = r.rho(&omega, 1e-9).unwrap();
        assert!((col[0] - c(2., 0.)).norm() < 1e-12 && (col[1] - c(0., 1.)).norm() < 1e-12);
        assert!(matches!(
            r.rho(&Multivector::one(s), 1e-9),
            Err(CliffordError::NotInIdeal(_))
        ));
    }

    #[test]
    fn theta_of_t_is_identity() {
        let r = rep(3, 1);
        let t = r.basis().t.clone();
        assert!(r.theta(&t, 1e-9).unwrap().approx_eq(&ComplexMatrix::identity(4), 1e-12));
        let s = t.signature();
        assert!(r.theta(&Multivector::one(s), 1e-9).is_err());
    }

    #[test]
    fn normality_depends_on_orthonormality() {
        assert!(rep(2, 3).is_normal(1e-9).normal);
        let dirac = preset_ideal_basis(&Signature::complex(1, 3).unwrap(), Preset::Dirac).unwrap();
        assert!(Representation::new(dirac.clone()).is_normal(1e-9).normal);
        let skewed = Representation::new(dirac.with_scaled(0, 2.0));
        let report = skewed.is_normal(1e-9);
        assert!(!report.normal && !report.orthonormal);
        // the action matrices still multiply correctly
        let s = skewed.basis().signature;
        let (e1, e2) = (Multivector::generator(s, 1).unwrap(), Multivector::generator(s, 2).unwrap());
        let lhs = skewed.action_matrix(&(&e1 * &e2)).unwrap();
        let rhs = &skewed.action_matrix(&e1).unwrap() * &skewed.action_matrix(&e2).unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn determinant_examples() {
        let r = rep(2, 0);
        let s = r.basis().signature;
        assert!((r.determinant(&Multivector::one(s)).unwrap() - c(1., 0.)).norm() < 1e-12);
        let e1 = Multivector::generator(s, 1).unwrap();
        assert!((r.determinant(&e1).unwrap() - c(-1., 0.)).norm() < 1e-12);
        let r4 = rep(2, 2);
        let lam = c(0.5, -1.5);
        let got = r4.determinant(&Multivector::scalar(r4.basis().signature, lam)).unwrap();
        assert!((got - lam.powi(4)).norm() < 1e-12);
    }

    #[test]
    fn spectrum_examples() {
        let r = rep(2, 0);
        let s = r.basis().signature;
        let ev = r.spectrum(&Multivector::generator(s, 1).unwrap(), 1e-9).unwrap();
        assert!((ev[0] - c(-1., 0.)).norm() < 1e-9 && (ev[1] - c(1., 0.)).norm() < 1e-9);

        let r = rep(1, 3);
        let s = r.basis().signature;
        for lam in r.spectrum(&Multivector::volume_element(s), 1e-9).unwrap() {
            assert!((lam * lam + 1.0).norm() < 1e-9);
        }
        let lam = c(0.3, 0.7);
        for x in r.spectrum(&Multivector::scalar(s, lam), 1e-9).unwrap() {
            assert!((x - lam).norm() < 1e-9);
        }
    }

    #[test]
    fn left_eigen_examples() {
        let r = rep(2, 0);
        let s = r.basis().signature;
        let e1 = Multivector::generator(s, 1).unwrap();
        let t = r.basis().t.clone();
        let rep1 = r.left_eigen_check(&e1, c(1., 0.), &t, 1e-9).unwrap();
        assert!(rep1.is_eigen && rep1.proper_ideal);
        let one = Multivector::one(s);
        assert!(r.left_eigen_check(&one, c(1., 0.), &e1, 1e-9).unwrap().is_eigen);
        assert!(!r.left_eigen_check(&e1, c(2., 0.), &t, 1e-9).unwrap().is_eigen);
        assert_eq!(
            r.left_eigen_check(&e1, c(1., 0.), &Multivector::zero(s), 1e-9),
            Err(CliffordError::ZeroEigenElement)
        );
    }
}
