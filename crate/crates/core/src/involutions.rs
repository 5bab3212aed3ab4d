//! Conjugation operators and the signature-dependent Hermitian scalar product.
//!
//! Every operator here is diagonal on the blade basis (up to complex
//! conjugation of the coefficient), so each is a sign table over masks.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{blade_product, Multivector, Signature};
use crate::error::Result;

/// The unary conjugations available on multivectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjugationKind {
    GradeInvolution,
    Reversion,
    ComplexConj,
    CliffordConj,
    Dagger,
}

impl ConjugationKind {
    pub const ALL: [ConjugationKind; 5] = [
        ConjugationKind::GradeInvolution,
        ConjugationKind::Reversion,
        ConjugationKind::ComplexConj,
        ConjugationKind::CliffordConj,
        ConjugationKind::Dagger,
    ];

    pub fn apply(self, u: &Multivector) -> Multivector {
        match self {
            ConjugationKind::GradeInvolution => grade_involution(u),
            ConjugationKind::Reversion => reversion(u),
            ConjugationKind::ComplexConj => complex_conjugate(u),
            ConjugationKind::CliffordConj => clifford_conjugate(u),
            ConjugationKind::Dagger => dagger(u),
        }
    }

    /// Whether the operator conjugates coefficients.
    pub fn is_antilinear(self) -> bool {
        matches!(
            self,
            ConjugationKind::ComplexConj | ConjugationKind::CliffordConj | ConjugationKind::Dagger
        )
    }
}

fn grade_sign(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn reversion_sign(k: usize) -> f64 {
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn map_blades(u: &Multivector, conj: bool, sign: impl Fn(u32) -> f64) -> Multivector {
    let sig = u.signature();
    let coeffs = u
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| {
            let c = if conj { c.conj() } else { *c };
            c * sign(m as u32)
        })
        .collect();
    // Sign maps never introduce imaginary parts.
    Multivector::from_coeffs(sig, coeffs).expect("blade sign map preserves shape and field")
}

/// `U^ = U|_{e^a -> -e^a}`: grade-`k` part times `(-1)^k`.
pub fn grade_involution(u: &Multivector) -> Multivector {
    map_blades(u, false, |m| grade_sign(m.count_ones() as usize))
}

/// `U~`: reverses generator order, grade-`k` part times `(-1)^{k(k-1)/2}`.
pub fn reversion(u: &Multivector) -> Multivector {
    map_blades(u, false, |m| reversion_sign(m.count_ones() as usize))
}

/// Coefficient-wise complex conjugation.
pub fn complex_conjugate(u: &Multivector) -> Multivector {
    map_blades(u, true, |_| 1.0)
}

/// `U* = conj(U)~`.
pub fn clifford_conjugate(u: &Multivector) -> Multivector {
    map_blades(u, true, |m| reversion_sign(m.count_ones() as usize))
}

/// Hermitian conjugation: `(e^{i_1...i_k})^dagger = e_{i_k}...e_{i_1}`,
/// `lambda^dagger = conj(lambda)`. On a blade this is the reversion sign times
/// the metric product over its generators.
pub fn dagger(u: &Multivector) -> Multivector {
    let sig = u.signature();
    map_blades(u, true, |m| {
        reversion_sign(m.count_ones() as usize) * f64::from(sig.metric_product(m))
    })
}

/// `(U, V) = Tr(U^dagger V)`, antilinear in the first slot.
pub fn scalar_product(u: &Multivector, v: &Multivector) -> Result<Complex64> {
    u.clifford_product(v)?; // signature check
    Ok(scalar_product_unchecked(u, v))
}

/// Scalar product without the signature check. Only the scalar part of
/// `U^dagger V` is needed, so it is accumulated directly over matching blades.
pub(crate) fn scalar_product_unchecked(u: &Multivector, v: &Multivector) -> Complex64 {
    let sig = u.signature();
    let ud = dagger(u);
    let mut acc = Complex64::new(0.0, 0.0);
    for (m, (a, b)) in ud.coeffs().iter().zip(v.coeffs()).enumerate() {
        if *a == Complex64::new(0.0, 0.0) || *b == Complex64::new(0.0, 0.0) {
            continue;
        }
        let (_, s) = blade_product(&sig, m as u32, m as u32);
        acc += a * b * f64::from(s);
    }
    acc
}

/// `Tr(U V)` computed from matching blades only.
pub fn trace_of_product(u: &Multivector, v: &Multivector) -> Result<Complex64> {
    u.clifford_product(v)?;
    let sig = u.signature();
    Ok(u
        .coeffs()
        .iter()
        .zip(v.coeffs())
        .enumerate()
        .map(|(m, (a, b))| a * b * f64::from(blade_product(&sig, m as u32, m as u32).1))
        .sum())
}

/// `sqrt((U, U))`.
pub fn norm(u: &Multivector) -> f64 {
    scalar_product_unchecked(u, u).re.max(0.0).sqrt()
}

/// Splits `U` into Hermitian and antiHermitian parts `(H, A)`, `U = H + A`.
pub fn hermitian_split(u: &Multivector) -> (Multivector, Multivector) {
    let d = dagger(u);
    ((u + &d) * 0.5, (u - &d) * 0.5)
}

/// Sign of `(e^a)^dagger = +-e^a` for a 1-based generator index.
pub fn generator_dagger_sign(sig: &Signature, a: usize) -> i8 {
    sig.metric(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BladeIndex;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::complex(p, q).unwrap()
    }

    fn b(s: Signature, idx: &[usize]) -> Multivector {
        Multivector::blade(s, idx).unwrap()
    }

    const I: Complex64 = Complex64::new(0.0, 1.0);

    #[test]
    fn grade_involution_examples() {
        let s = sig(2, 1);
        assert_eq!(grade_involution(&b(s, &[1])), -b(s, &[1]));
        assert_eq!(grade_involution(&b(s, &[1, 2])), b(s, &[1, 2]));
        assert_eq!(grade_involution(&Multivector::one(s)), Multivector::one(s));
    }

    #[test]
    fn reversion_examples() {
        let s = sig(3, 0);
        assert_eq!(reversion(&b(s, &[1, 2])), -b(s, &[1, 2]));
        assert_eq!(reversion(&b(s, &[2])), b(s, &[2]));
        assert_eq!(reversion(&b(s, &[1, 2, 3])), -b(s, &[1, 2, 3]));
    }

    #[test]
    fn clifford_conjugation_examples() {
        let s = sig(2, 2);
        let ie = Multivector::scalar(s, I);
        assert_eq!(clifford_conjugate(&ie), Multivector::scalar(s, -I));
        assert_eq!(clifford_conjugate(&b(s, &[1, 2])), -b(s, &[1, 2]));
        for (p, q) in [(1, 0), (2, 1), (1, 3), (3, 2), (4, 2)] {
            let s = sig(p, q);
            let n = s.n();
            let l = Multivector::volume_element(s);
            let expect = if (n * (n - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(clifford_conjugate(&l), l * expect);
        }
    }

    #[test]
    fn dagger_on_generators_and_scalars() {
        let s = sig(2, 3);
        for a in 1..=5 {
            let e = b(s, &[a]);
            let expect = if a <= 2 { e.clone() } else { -e.clone() };
            assert_eq!(dagger(&e), expect);
        }
        let lam = Complex64::new(0.3, -1.7);
        assert_eq!(
            dagger(&Multivector::scalar(s, lam)),
            Multivector::scalar(s, lam.conj())
        );
        // (e^{12})^dagger = e_2 e_1 = (-e^2)(e^1) = e^{12} in Cl(1,1)
        let s = sig(1, 1);
        assert_eq!(dagger(&b(s, &[1, 2])), b(s, &[1, 2]));
    }

    #[test]
    fn blade_basis_is_orthonormal() {
        let s = sig(1, 2);
        for x in 0..s.dim() as u32 {
            for y in 0..s.dim() as u32 {
                let u = Multivector::basis(s, BladeIndex(x));
                let v = Multivector::basis(s, BladeIndex(y));
                let expect = if x == y { 1.0 } else { 0.0 };
                assert_eq!(scalar_product(&u, &v).unwrap(), Complex64::new(expect, 0.0));
            }
        }
    }

    #[test]
    fn norm_is_coefficient_two_norm() {
        let s = sig(0, 3);
        let u = b(s, &[1]) * Complex64::new(1.0, 2.0) + b(s, &[2, 3]) * 3.0;
        assert!((scalar_product(&u, &u).unwrap().re - 14.0).abs() < 1e-12);
        assert!((norm(&u) - u.norm()).abs() < 1e-12);
    }

    #[test]
    fn hermitian_split_examples() {
        let s = sig(2, 0);
        let (h, a) = hermitian_split(&b(s, &[1]));
        assert_eq!(h, b(s, &[1]));
        assert!(a.is_zero(0.0));

        let s = sig(0, 1);
        let (h, a) = hermitian_split(&b(s, &[1]));
        assert!(h.is_zero(0.0));
        assert_eq!(a, b(s, &[1]));

        let u = Multivector::scalar(s, Complex64::new(1.0, 1.0));
        let (h, a) = hermitian_split(&u);
        assert_eq!(h, Multivector::one(s));
        assert_eq!(a, Multivector::scalar(s, I));
    }

    #[test]
    fn every_kind_is_an_involution_on_a_blade() {
        let s = sig(2, 2);
        let u = b(s, &[1, 3, 4]) * Complex64::new(0.5, 2.0);
        for kind in ConjugationKind::ALL {
            assert_eq!(kind.apply(&kind.apply(&u)), u, "{kind:?}");
        }
    }
}
