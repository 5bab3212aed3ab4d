//! Hodge star and the `Com` bracket on bivectors.

use num_complex::Complex64;

use crate::algebra::{permutation_sign, BladeIndex, Multivector};
use crate::error::Result;
use crate::DEFAULT_EPS;

/// `*U` with `epsilon_{1...n} = 1` and indices of `U` raised by the metric.
///
/// On a blade `A` with complement `A'`:
/// `*e^A = (prod_{a in A} eta_aa) * sign([A, A']) * e^{A'}`.
pub fn hodge_star(u: &Multivector) -> Multivector {
    let sig = u.signature();
    let full = sig.full_mask();
    let mut out = Multivector::zero(sig);
    for (blade, c) in u.terms() {
        let a = blade.mask();
        let comp = full ^ a;
        let mut order = blade.indices();
        order.extend(BladeIndex(comp).indices());
        let s = f64::from(sig.metric_product(a)) * f64::from(permutation_sign(&order));
        let target = BladeIndex(comp);
        out.set_coeff(target, out.coeff(target) + c * s);
    }
    out
}

fn bivector_components(u: &Multivector) -> Vec<Vec<Complex64>> {
    let n = u.signature().n();
    let mut t = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = u.coeff(BladeIndex((1 << i) | (1 << j)));
            t[i][j] = c;
            t[j][i] = -c;
        }
    }
    t
}

/// Bilinear bracket on grade-2 elements,
///
/// `Com(u/2 e^a1^e^a2, v/2 e^b1^e^b2) = u_{a1a2} v_{b1b2}/2 (-eta^{a1b1} e^a2^e^b2
///   - eta^{a2b2} e^a1^e^b1 + eta^{a1b2} e^a2^e^b1 + eta^{a2b1} e^a1^e^b2)`,
///
/// evaluated by direct summation over antisymmetric component arrays.
pub fn com_bracket(u: &Multivector, v: &Multivector) -> Result<Multivector> {
    u.ensure_same(v)?;
    u.require_grade(2, DEFAULT_EPS)?;
    v.require_grade(2, DEFAULT_EPS)?;
    Ok(com_bracket_unchecked(u, v))
}

pub(crate) fn com_bracket_unchecked(u: &Multivector, v: &Multivector) -> Multivector {
    let sig = u.signature();
    let n = sig.n();
    let uc = bivector_components(u);
    let vc = bivector_components(v);
    let eta: Vec<f64> = (1..=n).map(|a| f64::from(sig.metric(a))).collect();

    // coefficient array w[x][y] of e^x ^ e^y, summed over all x, y
    let mut w = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for a1 in 0..n {
        for a2 in 0..n {
            if uc[a1][a2] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for b1 in 0..n {
                for b2 in 0..n {
                    let c = uc[a1][a2] * vc[b1][b2] * 0.5;
                    if c == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    if a1 == b1 {
                        w[a2][b2] -= c * eta[a1];
                    }
                    if a2 == b2 {
                        w[a1][b1] -= c * eta[a2];
                    }
                    if a1 == b2 {
                        w[a2][b1] += c * eta[a1];
                    }
                    if a2 == b1 {
                        w[a1][b2] += c * eta[a2];
                    }
                }
            }
        }
    }
    let mut out = Multivector::zero(sig);
    for x in 0..n {
        for y in x + 1..n {
            let blade = BladeIndex((1 << x) | (1 << y));
            out.set_coeff(blade, w[x][y] - w[y][x]);
        }
    }
    out
}
