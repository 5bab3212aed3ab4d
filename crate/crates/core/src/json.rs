//! JSON forms of multivectors.
//!
//! `{ "p": 1, "q": 3, "field": "complex", "terms": [ { "blade": [1, 2], "re": 1.0, "im": 0.0 } ] }`
//!
//! Omitted blades are zero. Terms are written in display order and exact
//! zeros are skipped.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{BladeIndex, Field, Multivector, Signature};
use crate::error::{CliffordError, Result};

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    blade: Vec<usize>,
    re: f64,
    #[serde(default)]
    im: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct MultivectorJson {
    p: usize,
    q: usize,
    #[serde(default = "default_field")]
    field: Field,
    terms: Vec<TermJson>,
}

fn default_field() -> Field {
    Field::Complex
}

impl MultivectorJson {
    fn from_multivector(u: &Multivector) -> Self {
        let sig = u.signature();
        let mut blades: Vec<BladeIndex> = u.terms().map(|(b, _)| b).collect();
        blades.sort_by(BladeIndex::display_cmp);
        MultivectorJson {
            p: sig.p(),
            q: sig.q(),
            field: sig.field(),
            terms: blades
                .into_iter()
                .map(|b| {
                    let c = u.coeff(b);
                    TermJson {
                        blade: b.indices(),
                        re: c.re + 0.0,
                        im: c.im + 0.0,
                    }
                })
                .collect(),
        }
    }

    fn into_multivector(self) -> Result<Multivector> {
        let sig = Signature::new(self.p, self.q, self.field)?;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); sig.dim()];
        let mut seen = vec![false; sig.dim()];
        for t in self.terms {
            let b = BladeIndex::from_indices(sig.n(), &t.blade)?;
            let m = b.mask() as usize;
            if seen[m] {
                return Err(CliffordError::Parse(format!("duplicate blade {b}")));
            }
            seen[m] = true;
            coeffs[m] = Complex64::new(t.re, t.im);
        }
        Multivector::from_coeffs(sig, coeffs)
    }
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultivectorJson::from_multivector(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MultivectorJson::deserialize(d)?
            .into_multivector()
            .map_err(serde::de::Error::custom)
    }
}

/// Parses a multivector from JSON text.
pub fn multivector_from_str(s: &str) -> Result<Multivector> {
    let raw: MultivectorJson =
        serde_json::from_str(s).map_err(|e| CliffordError::Parse(e.to_string()))?;
    raw.into_multivector()
}

pub fn multivector_to_string(u: &Multivector) -> String {
    serde_json::to_string_pretty(u).expect("multivector JSON is always serializable")
}
