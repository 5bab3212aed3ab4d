use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ideal_dimension, standard_ideal_basis, standard_idempotent, IdealBasis};
use crate::algebra::{Multivector, Signature};
use crate::error::{CliffordError, Result};
use crate::involutions::scalar_product_unchecked;

/// Named choice of ideal basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// `tau_k = (sqrt 2)^{floor(n/2)} c_k t` for every signature.
    Standard,
    /// The tabulated bases for `n <= 5`; for odd `n` they split `I(t)` into
    /// the two eigenspaces of the volume element.
    Paper,
    /// Reordered `(1,3)` basis giving the Dirac gamma matrices.
    Dirac,
    /// Volume-element eigenbasis of the standard basis for any odd `n`.
    Block,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Standard, Preset::Paper, Preset::Dirac, Preset::Block];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Standard => "standard",
            Preset::Paper => "paper",
            Preset::Dirac => "dirac",
            Preset::Block => "block",
        }
    }

    /// Whether the preset is defined for `sig`.
    pub fn supports(self, sig: &Signature) -> bool {
        match self {
            Preset::Standard => true,
            Preset::Paper => sig.n() <= 5,
            Preset::Dirac => (sig.p(), sig.q()) == (1, 3),
            Preset::Block => sig.n() % 2 == 1,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| CliffordError::Parse(format!("unknown preset `{s}`")))
    }
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// `sum c_j e^{A_j}`.
fn lin(sig: Signature, terms: &[(Complex64, &[usize])]) -> Multivector {
    let mut out = Multivector::zero(sig);
    for (c, idx) in terms {
        out += Multivector::blade(sig, idx).expect("preset blades are valid") * *c;
    }
    out
}

/// Pairs `x +- w y` as listed: `c_k = a_k + s_k * phase * b_k`.
fn pairs(sig: Signature, phase: Complex64, list: &[(&[usize], f64, &[usize])]) -> Vec<Multivector> {
    list.iter()
        .map(|(a, s, b)| lin(sig, &[(ONE, a), (phase * *s, b)]))
        .collect()
}

fn paper_coefficients(sig: Signature) -> Option<Vec<Multivector>> {
    let (p, q) = (sig.p(), sig.q());
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let list = match (p, q) {
        (1, 0) => vec![
            lin(sig, &[(ONE * r, &[]), (ONE * r, &[1])]),
            lin(sig, &[(ONE * r, &[]), (-ONE * r, &[1])]),
        ],
        (0, 1) => vec![
            lin(sig, &[(ONE * r, &[]), (-I * r, &[1])]),
            lin(sig, &[(ONE * r, &[]), (I * r, &[1])]),
        ],
        (3, 0) => pairs(
            sig,
            I,
            &[(&[], -1.0, &[2, 3]), (&[2], -1.0, &[3]), (&[2], 1.0, &[3]), (&[], 1.0, &[2, 3])],
        ),
        (2, 1) => pairs(
            sig,
            ONE,
            &[(&[], 1.0, &[2, 3]), (&[2], 1.0, &[3]), (&[2], -1.0, &[3]), (&[], -1.0, &[2, 3])],
        ),
        (1, 2) | (0, 3) => pairs(
            sig,
            I,
            &[(&[], -1.0, &[2, 3]), (&[2], 1.0, &[3]), (&[2], -1.0, &[3]), (&[], 1.0, &[2, 3])],
        ),
        (5, 0) | (4, 1) => {
            let phase = if p == 5 { I } else { ONE };
            let c = pairs(
                sig,
                phase,
                &[
                    (&[], -1.0, &[4, 5]),
                    (&[2, 4], -1.0, &[2, 5]),
                    (&[2], -1.0, &[2, 4, 5]),
                    (&[4], -1.0, &[5]),
                    (&[4], 1.0, &[5]),
                    (&[2], 1.0, &[2, 4, 5]),
                    (&[2, 4], 1.0, &[2, 5]),
                    (&[], 1.0, &[4, 5]),
                ],
            );
            c.into_iter().map(|x| x * std::f64::consts::SQRT_2).collect()
        }
        (_, _) if p + q == 5 => {
            let c = pairs(
                sig,
                I,
                &[
                    (&[], -1.0, &[4, 5]),
                    (&[2], -1.0, &[2, 4, 5]),
                    (&[4], 1.0, &[5]),
                    (&[2, 4], 1.0, &[2, 5]),
                    (&[2, 4], -1.0, &[2, 5]),
                    (&[4], -1.0, &[5]),
                    (&[2], 1.0, &[2, 4, 5]),
                    (&[], 1.0, &[4, 5]),
                ],
            );
            c.into_iter().map(|x| x * std::f64::consts::SQRT_2).collect()
        }
        _ => return None,
    };
    Some(list)
}

fn unknown(sig: &Signature, preset: Preset) -> CliffordError {
    CliffordError::UnknownPreset {
        preset: preset.name().to_string(),
        p: sig.p(),
        q: sig.q(),
    }
}

/// Ideal basis for a named preset.
pub fn preset_ideal_basis(sig: &Signature, preset: Preset) -> Result<IdealBasis> {
    if !preset.supports(sig) {
        return Err(unknown(sig, preset));
    }
    match preset {
        Preset::Standard => standard_ideal_basis(sig),
        Preset::Paper if sig.n() % 2 == 0 => {
            let mut b = standard_ideal_basis(sig)?;
            b.preset = "paper".into();
            Ok(b)
        }
        Preset::Paper => {
            let t = standard_idempotent(sig)?;
            let coeffs = paper_coefficients(*sig).ok_or_else(|| unknown(sig, preset))?;
            let taus = coeffs.iter().map(|c| c * &t).collect();
            IdealBasis::new(t, taus, "paper")
        }
        Preset::Dirac => {
            let s = standard_ideal_basis(sig)?;
            let taus = vec![
                -s.taus[0].clone(),
                s.taus[1].clone(),
                s.taus[3].clone(),
                s.taus[2].clone(),
            ];
            IdealBasis::new(s.t, taus, "dirac")
        }
        Preset::Block => block_basis(sig),
    }
}

/// For odd `n` the volume element is central. With `w = l` or `i l` chosen so
/// that `w^2 = e`, the projectors `(e +- w)/2` split `I(t)` into two halves
/// invariant under left multiplication. Orthonormalizing the projected
/// standard basis vectors (the `+` half first) gives a basis in which every
/// representation matrix has two diagonal blocks.
fn block_basis(sig: &Signature) -> Result<IdealBasis> {
    let std_basis = standard_ideal_basis(sig)?;
    let l = Multivector::volume_element(*sig);
    let sq = (&l * &l).trace();
    let w = if sq.re > 0.0 { l } else { l * I };
    let e = Multivector::one(*sig);
    let plus = (&e + &w) * 0.5;
    let minus = (&e - &w) * 0.5;

    let half = ideal_dimension(sig.n()) / 2;
    let mut taus: Vec<Multivector> = Vec::new();
    for proj in [&plus, &minus] {
        let mut found = 0;
        for tau in &std_basis.taus {
            if found == half {
                break;
            }
            let mut v = proj * tau;
            for u in &taus {
                let c = scalar_product_unchecked(u, &v);
                v -= u.scale(c);
            }
            let norm = scalar_product_unchecked(&v, &v).re.sqrt();
            if norm > 1e-6 {
                taus.push(v.scale(1.0 / norm));
                found += 1;
            }
        }
    }
    IdealBasis::new(std_basis.t, taus, "block")
}
