use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CliffordError, Result};

/// Largest supported number of generators.
pub const N_MAX: usize = 12;

/// Coefficient field of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// Signature `(p, q)` of a Clifford algebra: `p` generators square to `+e`,
/// the following `q` square to `-e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: usize,
    q: usize,
    field: Field,
}

impl Signature {
    pub fn new(p: usize, q: usize, field: Field) -> Result<Self> {
        let n = p + q;
        if n == 0 {
            return Err(CliffordError::InvalidSignature {
                p,
                q,
                reason: "need at least one generator".into(),
            });
        }
        if n > N_MAX {
            return Err(CliffordError::InvalidSignature {
                p,
                q,
                reason: format!("n = {n} exceeds the supported maximum {N_MAX}"),
            });
        }
        Ok(Signature { p, q, field })
    }

    pub fn complex(p: usize, q: usize) -> Result<Self> {
        Self::new(p, q, Field::Complex)
    }

    pub fn real(p: usize, q: usize) -> Result<Self> {
        Self::new(p, q, Field::Real)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn with_field(self, field: Field) -> Self {
        Signature { field, ..self }
    }

    /// Number of basis blades, `2^n`.
    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    /// Mask of all generators.
    pub fn full_mask(&self) -> u32 {
        (1u32 << self.n()) - 1
    }

    /// Mask of the generators squaring to `-e` (indices `p+1..=n`).
    pub fn negative_mask(&self) -> u32 {
        self.full_mask() ^ ((1u32 << self.p) - 1)
    }

    /// Diagonal metric entry for the 1-based generator index `a`.
    pub fn metric(&self, a: usize) -> i8 {
        debug_assert!(a >= 1 && a <= self.n());
        if a <= self.p {
            1
        } else {
            -1
        }
    }

    /// Sign of `det(eta)`, which is `(-1)^q`.
    pub fn det_sign(&self) -> i8 {
        if self.q % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Product of the metric entries over the generators of `mask`.
    pub fn metric_product(&self, mask: u32) -> i8 {
        if (mask & self.negative_mask()).count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All signatures with `p + q = n`, ordered by decreasing `p`.
    pub fn all_with_n(n: usize, field: Field) -> Result<Vec<Signature>> {
        (0..=n).rev().map(|p| Signature::new(p, n - p, field)).collect()
    }

    /// All signatures with `1 <= p + q <= max_n`.
    pub fn all_up_to(max_n: usize, field: Field) -> Result<Vec<Signature>> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            out.extend(Self::all_with_n(n, field)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl std::str::FromStr for Signature {
    type Err = CliffordError;

    /// Parses `"p,q"` into a complex-field signature.
    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .split_once(',')
            .ok_or_else(|| CliffordError::Parse(format!("signature `{s}` is not of the form p,q")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| CliffordError::Parse(format!("signature `{s}`: {e}")))
        };
        Signature::complex(parse(p)?, parse(q)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_follows_p_then_q() {
        let sig = Signature::real(1, 3).unwrap();
        assert_eq!(sig.metric(1), 1);
        assert_eq!(sig.metric(2), -1);
        assert_eq!(sig.metric(4), -1);
        assert_eq!(sig.det_sign(), -1);
        assert_eq!(sig.negative_mask(), 0b1110);
    }

    #[test]
    fn rejects_empty_and_oversized() {
        assert!(Signature::real(0, 0).is_err());
        assert!(Signature::real(7, 6).is_err());
        assert!(Signature::real(6, 6).is_ok());
    }

    #[test]
    fn parses_p_comma_q() {
        let sig: Signature = "2, 1".parse().unwrap();
        assert_eq!((sig.p(), sig.q(), sig.field()), (2, 1, Field::Complex));
        assert!("21".parse::<Signature>().is_err());
        assert!("9,9".parse::<Signature>().is_err());
    }
}
