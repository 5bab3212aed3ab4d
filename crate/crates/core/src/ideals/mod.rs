//! Hermitian idempotents, left ideals `I(t) = {U : U = Ut}`, corners
//! `K(t) = {U : U = tUt}` and orthonormal ideal bases.

mod presets;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{BladeIndex, Field, Multivector, Signature};
use crate::error::{CliffordError, Result};
use crate::involutions::{dagger, scalar_product_unchecked};
use crate::linalg::ComplexMatrix;

pub use presets::{preset_ideal_basis, Preset};

const I: Complex64 = Complex64::new(0.0, 1.0);

fn require_complex(sig: &Signature) -> Result<()> {
    if sig.field() != Field::Complex {
        return Err(CliffordError::RequiresComplexField);
    }
    Ok(())
}

/// Factors of the standard idempotent: `1/2(e + i^a e^1)` followed by
/// `1/2(e + i^{b_k} e^{2k} e^{2k+1})` for `k = 1 .. floor(n/2) - 1`.
///
/// `i^a` and `i^{b_k}` are chosen so the element added to `e` squares to `e`.
/// Empty for `n = 1`, where `t = e`.
pub fn idempotent_factors(sig: &Signature) -> Result<Vec<Multivector>> {
    require_complex(sig)?;
    let n = sig.n();
    if n == 1 {
        return Ok(Vec::new());
    }
    let e = Multivector::one(*sig);
    let half = |x: Multivector| (&e + &x) * 0.5;
    let mut out = Vec::new();
    let e1 = Multivector::generator(*sig, 1)?;
    out.push(half(if sig.p() == 0 { e1 * I } else { e1 }));
    for k in 1..n / 2 {
        let pair = Multivector::blade(*sig, &[2 * k, 2 * k + 1])?;
        out.push(half(if 2 * k == sig.p() { pair } else { pair * I }));
    }
    Ok(out)
}

/// The standard Hermitian idempotent `t`, the product of
/// [`idempotent_factors`] (which mutually commute).
pub fn standard_idempotent(sig: &Signature) -> Result<Multivector> {
    Ok(idempotent_factors(sig)?
        .into_iter()
        .fold(Multivector::one(*sig), |acc, f| &acc * &f))
}

/// `t^2 = t` and `t^dagger = t` within `eps`.
pub fn is_hermitian_idempotent(t: &Multivector, eps: f64) -> bool {
    (t * t).approx_eq(t, eps) && dagger(t).approx_eq(t, eps)
}

/// Generators of the subalgebra `Q`: `e^2, e^4, ..` up to `n` for even `n`;
/// for odd `n`, `e^2, e^4, .., e^{n-1}` followed by `e^n`.
pub fn q_generators(n: usize) -> Vec<usize> {
    let mut g: Vec<usize> = (2..=n).step_by(2).collect();
    if n % 2 == 1 {
        g.push(n);
    }
    g
}

/// Blades of `Q`: even-grade blades first, then odd ones, each class ordered
/// by grade and then lexicographically.
pub fn q_basis(n: usize) -> Vec<BladeIndex> {
    let gens = q_generators(n);
    let mut blades: Vec<BladeIndex> = (0..1u32 << gens.len())
        .map(|sel| {
            let mask = gens
                .iter()
                .enumerate()
                .filter(|(j, _)| sel >> j & 1 == 1)
                .fold(0u32, |m, (_, &a)| m | 1 << (a - 1));
            BladeIndex(mask)
        })
        .collect();
    blades.sort_by(|a, b| {
        (a.grade() % 2)
            .cmp(&(b.grade() % 2))
            .then_with(|| a.display_cmp(b))
    });
    blades
}

/// Dimension of minimal left ideals and of the matrix representation,
/// `2^{ceil(n/2)}`.
pub fn ideal_dimension(n: usize) -> usize {
    1 << n.div_ceil(2)
}

/// A Hermitian idempotent with an ordered basis of its left ideal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealBasis {
    #[serde(with = "sig_pair")]
    pub signature: Signature,
    pub preset: String,
    pub t: Multivector,
    pub taus: Vec<Multivector>,
}

mod sig_pair {
    use super::Signature;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(sig: &Signature, s: S) -> Result<S::Ok, S::Error> {
        [sig.p(), sig.q()].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Signature, D::Error> {
        let [p, q] = <[usize; 2]>::deserialize(d)?;
        Signature::complex(p, q).map_err(serde::de::Error::custom)
    }
}

impl IdealBasis {
    pub fn new(t: Multivector, taus: Vec<Multivector>, preset: impl Into<String>) -> Result<Self> {
        let sig = t.signature();
        require_complex(&sig)?;
        for tau in &taus {
            t.ensure_same(tau)?;
        }
        Ok(IdealBasis {
            signature: sig,
            preset: preset.into(),
            t,
            taus,
        })
    }

    pub fn dim(&self) -> usize {
        self.taus.len()
    }

    /// `G[k][l] = (tau_k, tau_l)`.
    pub fn gram(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim(), |k, l| {
            scalar_product_unchecked(&self.taus[k], &self.taus[l])
        })
    }

    /// `max |G - 1|`.
    pub fn orthonormality_residual(&self) -> f64 {
        self.gram().max_abs_diff(&ComplexMatrix::identity(self.dim()))
    }

    /// Largest `|tau_k t - tau_k|`.
    pub fn membership_residual(&self) -> f64 {
        self.taus
            .iter()
            .map(|tau| (tau * &self.t).max_abs_diff(tau))
            .fold(0.0, f64::max)
    }

    /// Largest of `|t^2 - t|` and `|t^dagger - t|`.
    pub fn idempotent_residual(&self) -> f64 {
        (&self.t * &self.t)
            .max_abs_diff(&self.t)
            .max(dagger(&self.t).max_abs_diff(&self.t))
    }

    /// All basis invariants hold within `eps`.
    pub fn check(&self, eps: f64) -> bool {
        self.dim() == ideal_dimension(self.signature.n())
            && self.idempotent_residual() <= eps
            && self.membership_residual() <= eps
            && self.orthonormality_residual() <= eps
    }

    /// Coordinates `(tau_k, U)` of `U` and the residual of the expansion.
    pub fn coordinates(&self, u: &Multivector) -> Result<(Vec<Complex64>, f64)> {
        self.t.ensure_same(u)?;
        let coords: Vec<Complex64> = self
            .taus
            .iter()
            .map(|tau| scalar_product_unchecked(tau, u))
            .collect();
        let mut rebuilt = Multivector::zero(self.signature);
        for (c, tau) in coords.iter().zip(&self.taus) {
            rebuilt += tau.scale(*c);
        }
        Ok((coords, rebuilt.max_abs_diff(u)))
    }

    /// Basis element `k` scaled by `c`; used to build deliberately
    /// non-orthonormal bases in checks.
    pub fn with_scaled(&self, k: usize, c: f64) -> IdealBasis {
        let mut out = self.clone();
        out.taus[k] = out.taus[k].scale(c);
        out.preset = format!("{}*", self.preset);
        out
    }
}

/// Orthonormal basis `tau_k = (sqrt 2)^{floor(n/2)} c_k t` of `I(t)` for the
/// standard idempotent, `c_k` running over [`q_basis`].
pub fn standard_ideal_basis(sig: &Signature) -> Result<IdealBasis> {
    let t = standard_idempotent(sig)?;
    let scale = 2f64.sqrt().powi((sig.n() / 2) as i32);
    let taus = q_basis(sig.n())
        .into_iter()
        .map(|b| &Multivector::basis(*sig, b) * &t * scale)
        .collect();
    IdealBasis::new(t, taus, "standard")
}

/// `U = U t` within `eps`.
pub fn in_ideal(u: &Multivector, t: &Multivector, eps: f64) -> Result<bool> {
    Ok(u.clifford_product(t)?.approx_eq(u, eps))
}

/// `U = t U t` within `eps`.
pub fn in_corner(u: &Multivector, t: &Multivector, eps: f64) -> Result<bool> {
    Ok(t.clifford_product(u)?.clifford_product(t)?.approx_eq(u, eps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::complex(p, q).unwrap()
    }

    fn b(s: Signature, idx: &[usize]) -> Multivector {
        Multivector::blade(s, idx).unwrap()
    }

    #[test]
    fn standard_idempotent_small_cases() {
        let s = sig(2, 0);
        let half_e1 = (Multivector::one(s) + b(s, &[1])) * 0.5;
        assert_eq!(standard_idempotent(&s).unwrap(), half_e1);
        let s = sig(1, 1);
        assert_eq!(
            standard_idempotent(&s).unwrap(),
            (Multivector::one(s) + b(s, &[1])) * 0.5
        );
        let s = sig(0, 2);
        assert_eq!(
            standard_idempotent(&s).unwrap(),
            (Multivector::one(s) + b(s, &[1]) * I) * 0.5
        );
        let s = sig(2, 2);
        let f1 = (Multivector::one(s) + b(s, &[1])) * 0.5;
        let f2 = (Multivector::one(s) + b(s, &[2, 3])) * 0.5;
        assert_eq!(standard_idempotent(&s).unwrap(), &f1 * &f2);
        let s = sig(1, 0);
        assert_eq!(standard_idempotent(&s).unwrap(), Multivector::one(s));
    }

    #[test]
    fn standard_idempotent_needs_complex_field() {
        let s = Signature::real(2, 0).unwrap();
        assert_eq!(standard_idempotent(&s), Err(CliffordError::RequiresComplexField));
    }

    #[test]
    fn hermitian_idempotent_predicate() {
        let s = sig(2, 0);
        assert!(is_hermitian_idempotent(&Multivector::one(s), 1e-9));
        assert!(is_hermitian_idempotent(&Multivector::zero(s), 1e-9));
        assert!(!is_hermitian_idempotent(&b(s, &[1]), 1e-9));
    }

    #[test]
    fn q_basis_orders() {
        let names = |n| {
            q_basis(n)
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(4), ["e", "e^24", "e^2", "e^4"]);
        assert_eq!(names(2), ["e", "e^2"]);
        assert_eq!(
            names(5),
            ["e", "e^24", "e^25", "e^45", "e^2", "e^4", "e^5", "e^245"]
        );
        assert_eq!(names(1), ["e", "e^1"]);
        for n in 1..=8 {
            assert_eq!(q_basis(n).len(), ideal_dimension(n));
        }
    }

    #[test]
    fn standard_basis_examples() {
        let s = sig(2, 0);
        let basis = standard_ideal_basis(&s).unwrap();
        let t = &basis.t;
        let r2 = 2f64.sqrt();
        assert!(basis.taus[0].approx_eq(&t.scale(r2), 1e-15));
        assert!(basis.taus[1].approx_eq(&(&b(s, &[2]) * t * r2), 1e-15));
        for (p, q) in [(1, 0), (0, 1), (3, 0), (1, 3), (2, 3), (3, 3)] {
            assert!(standard_ideal_basis(&sig(p, q)).unwrap().check(1e-9), "({p},{q})");
        }
    }

    #[test]
    fn ideal_and_corner_membership() {
        let s = sig(1, 3);
        let basis = standard_ideal_basis(&s).unwrap();
        let t = &basis.t;
        assert!(in_ideal(t, t, 1e-9).unwrap());
        assert!(in_corner(t, t, 1e-9).unwrap());
        assert!(!in_ideal(&Multivector::one(s), t, 1e-9).unwrap());
        for tau in &basis.taus {
            assert!(in_ideal(tau, t, 1e-9).unwrap());
        }
    }

    #[test]
    fn json_round_trip() {
        let basis = standard_ideal_basis(&sig(1, 2)).unwrap();
        let text = serde_json::to_string(&basis).unwrap();
        assert!(text.starts_with(r#"{"signature":[1,2],"preset":"standard","#));
        let back: IdealBasis = serde_json::from_str(&text).unwrap();
        assert_eq!(back, basis);
    }
}
