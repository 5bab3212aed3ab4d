//! Sandwich expressions for the Hermitian conjugate, used as independent
//! oracles for [`crate::involutions::dagger`].

use crate::algebra::Multivector;
use crate::involutions::{clifford_conjugate, grade_involution};

fn generator_product(sig: crate::Signature, indices: impl Iterator<Item = usize>) -> Multivector {
    indices.fold(Multivector::one(sig), |acc, a| {
        &acc * &Multivector::generator(sig, a).expect("index in range")
    })
}

/// `(-1)^q e^n .. e^{p+1} X e^{p+1} .. e^n` with `X = U*`, grade-involuted
/// when `q` is odd.
pub fn dagger_via_negative_generators(u: &Multivector) -> Multivector {
    let sig = u.signature();
    let (p, q, n) = (sig.p(), sig.q(), sig.n());
    let mut x = clifford_conjugate(u);
    if q % 2 == 1 {
        x = grade_involution(&x);
    }
    let left = generator_product(sig, (p + 1..=n).rev());
    let right = generator_product(sig, p + 1..=n);
    let sign = if q % 2 == 0 { 1.0 } else { -1.0 };
    (&(&left * &x) * &right) * sign
}

/// `e^p .. e^1 X e^1 .. e^p` with `X = U*`, grade-involuted when `p` is even.
pub fn dagger_via_positive_generators(u: &Multivector) -> Multivector {
    let sig = u.signature();
    let p = sig.p();
    let mut x = clifford_conjugate(u);
    if p % 2 == 0 {
        x = grade_involution(&x);
    }
    let left = generator_product(sig, (1..=p).rev());
    let right = generator_product(sig, 1..=p);
    &(&left * &x) * &right
}
