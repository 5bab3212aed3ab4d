//! Seeded random multivectors for property checks. Real and imaginary parts
//! are drawn uniformly from `[-1, 1]`; real-field signatures get real
//! coefficients.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, Multivector, Signature};

pub type TestRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for one labelled sub-task, so results do not depend
/// on how tasks are scheduled.
pub fn derived_rng(seed: u64, label: &str) -> TestRng {
    // FNV-1a over the label, mixed with the seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h.rotate_left(17))
}

pub fn random_coefficient(field: Field, rng: &mut impl Rng) -> Complex64 {
    let re = rng.random_range(-1.0..=1.0);
    let im = match field {
        Field::Real => 0.0,
        Field::Complex => rng.random_range(-1.0..=1.0),
    };
    Complex64::new(re, im)
}

/// Random element with every blade present.
pub fn random_multivector(sig: Signature, rng: &mut impl Rng) -> Multivector {
    random_filtered(sig, rng, |_| true)
}

/// Random element of grade `k` (zero if `k > n`).
pub fn random_homogeneous(sig: Signature, k: usize, rng: &mut impl Rng) -> Multivector {
    random_filtered(sig, rng, |m| m.count_ones() as usize == k)
}

/// Random element supported on the blades whose masks pass `keep`.
pub fn random_filtered(sig: Signature, rng: &mut impl Rng, keep: impl Fn(u32) -> bool) -> Multivector {
    let mut u = Multivector::zero(sig);
    for m in 0..sig.dim() as u32 {
        if keep(m) {
            u.set_coeff(crate::BladeIndex(m), random_coefficient(sig.field(), rng));
        }
    }
    u
}
