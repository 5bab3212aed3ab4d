//! Checks on the commutator with bivectors, the generator contraction, the
//! volume element and the center.

use crate::algebra::{blade_product, BladeIndex, Multivector, Signature};

/// Blade pairs `(A, B)` with `grade(B) = 2`, `1 <= grade(A) <= n - 1`, whose
/// commutator leaves the grade of `A`. Empty when the theorem holds.
pub fn bivector_commutator_violations(sig: &Signature) -> Vec<(BladeIndex, BladeIndex)> {
    let n = sig.n();
    let mut bad = Vec::new();
    for a in 1..sig.dim() as u32 {
        let k = a.count_ones() as usize;
        if k == 0 || k >= n {
            continue;
        }
        for b in BladeIndex::of_grade(n, 2) {
            let (m, s1) = blade_product(sig, a, b.mask());
            let (_, s2) = blade_product(sig, b.mask(), a);
            if s1 != s2 && m.count_ones() as usize != k {
                bad.push((BladeIndex(a), b));
            }
        }
    }
    bad
}

/// `(-1)^k (n - 2k)`.
pub fn contraction_factor(n: usize, k: usize) -> f64 {
    let s = if k % 2 == 0 { 1.0 } else { -1.0 };
    s * (n as f64 - 2.0 * k as f64)
}

/// `sum_k (-1)^k (n - 2k) <U>_k`.
pub fn contraction_prediction(u: &Multivector) -> Multivector {
    let n = u.signature().n();
    let mut out = u.clone();
    for m in 0..u.signature().dim() as u32 {
        let b = BladeIndex(m);
        out.set_coeff(b, u.coeff(b) * contraction_factor(n, b.grade()));
    }
    out
}

/// `l^2 = (-1)^{n(n-1)/2} det(eta) e`.
pub fn volume_square_prediction(sig: &Signature) -> Multivector {
    let n = sig.n();
    let s = if (n * (n - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    Multivector::scalar(*sig, s * f64::from(sig.det_sign()))
}

/// `l e^A = (-1)^{k(n+1)} e^A l` for every blade; returns offending blades.
pub fn volume_commutation_violations(sig: &Signature) -> Vec<BladeIndex> {
    let n = sig.n();
    let full = sig.full_mask();
    (0..sig.dim() as u32)
        .filter(|&a| {
            let k = a.count_ones() as usize;
            let (_, s1) = blade_product(sig, full, a);
            let (_, s2) = blade_product(sig, a, full);
            let want: i8 = if (k * (n + 1)) % 2 == 0 { 1 } else { -1 };
            s1 != want * s2
        })
        .map(BladeIndex)
        .collect()
}

/// Blades commuting with every blade. The center is their span because a
/// blade either commutes or anticommutes with each basis element.
pub fn central_blades(sig: &Signature) -> Vec<BladeIndex> {
    (0..sig.dim() as u32)
        .filter(|&v| {
            (0..sig.dim() as u32).all(|u| blade_product(sig, u, v).1 == blade_product(sig, v, u).1)
        })
        .map(BladeIndex)
        .collect()
}

/// Expected center: `{e}` for even `n`, `{e, l}` for odd `n`.
pub fn expected_central_blades(sig: &Signature) -> Vec<BladeIndex> {
    if sig.n() % 2 == 0 {
        vec![BladeIndex::SCALAR]
    } else {
        vec![BladeIndex::SCALAR, BladeIndex(sig.full_mask())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;

    #[test]
    fn bivector_commutators_preserve_grade() {
        for s in Signature::all_up_to(5, Field::Real).unwrap() {
            assert!(bivector_commutator_violations(&s).is_empty(), "{s}");
        }
    }

    #[test]
    fn contraction_special_cases() {
        assert_eq!(contraction_factor(4, 2), 0.0);
        assert_eq!(contraction_factor(4, 1), -2.0);
        assert_eq!(contraction_factor(4, 4), -4.0);
    }

    #[test]
    fn volume_element_examples() {
        let s = Signature::real(1, 3).unwrap();
        assert_eq!(volume_square_prediction(&s), Multivector::scalar(s, -1.0));
        let l = Multivector::volume_element(s);
        assert_eq!(&l * &l, volume_square_prediction(&s));
        let s = Signature::real(2, 0).unwrap();
        assert_eq!(volume_square_prediction(&s), Multivector::scalar(s, -1.0));
        for s in Signature::all_up_to(5, Field::Real).unwrap() {
            assert!(volume_commutation_violations(&s).is_empty());
        }
    }

    #[test]
    fn center_by_parity() {
        for s in Signature::all_up_to(5, Field::Real).unwrap() {
            assert_eq!(central_blades(&s), expected_central_blades(&s), "{s}");
        }
    }
}
