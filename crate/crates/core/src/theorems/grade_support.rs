//! Grade structure of commutators and anticommutators of homogeneous
//! elements.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{BladeIndex, Multivector, Signature};
use crate::error::{CliffordError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bracket {
    Commutator,
    Anticommutator,
}

impl Bracket {
    pub fn apply(self, u: &Multivector, v: &Multivector) -> Result<Multivector> {
        match self {
            Bracket::Commutator => u.commutator(v),
            Bracket::Anticommutator => u.anticommutator(v),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Bracket::Commutator => "[]",
            Bracket::Anticommutator => "{}",
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Sorted set of grades.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeSupport(pub BTreeSet<usize>);

impl GradeSupport {
    pub fn from_grades(g: impl IntoIterator<Item = usize>) -> Self {
        GradeSupport(g.into_iter().collect())
    }

    pub fn is_subset(&self, other: &GradeSupport) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn grades(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

impl fmt::Display for GradeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", g.join(","))
    }
}

/// Grades `first, first + 4, .., last` clipped to `[0, n]`.
fn stepped(first: i64, last: i64, n: usize) -> GradeSupport {
    let mut out = BTreeSet::new();
    let mut g = first;
    while g <= last {
        if g >= 0 && g <= n as i64 {
            out.insert(g as usize);
        }
        g += 4;
    }
    GradeSupport(out)
}

/// Grades allowed in `[U, V]` or `{U, V}` for `U` of grade `k` and `V` of
/// grade `l` in `n` generators. For `k < l` the arguments are swapped, which
/// changes at most the sign of the bracket.
pub fn predicted_support(k: usize, l: usize, bracket: Bracket, n: usize) -> GradeSupport {
    let (k, l) = if k >= l { (k, l) } else { (l, k) };
    let (k, l) = (k as i64, l as i64);
    let l_even = l % 2 == 0;
    let k_even = k % 2 == 0;
    let (first, last) = match (bracket, l_even, k_even) {
        (Bracket::Commutator, true, _) => (k - l + 2, k + l - 2),
        (Bracket::Commutator, false, true) => (k - l, k + l - 2),
        (Bracket::Commutator, false, false) => (k - l + 2, k + l),
        (Bracket::Anticommutator, true, _) => (k - l, k + l),
        (Bracket::Anticommutator, false, true) => (k - l + 2, k + l),
        (Bracket::Anticommutator, false, false) => (k - l, k + l - 2),
    };
    stepped(first, last, n)
}

/// Predicted and actual supports of both brackets for a homogeneous pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupportCheck {
    pub k: usize,
    pub l: usize,
    pub commutator_predicted: GradeSupport,
    pub commutator_actual: GradeSupport,
    pub anticommutator_predicted: GradeSupport,
    pub anticommutator_actual: GradeSupport,
}

impl SupportCheck {
    pub fn holds(&self) -> bool {
        self.commutator_actual.is_subset(&self.commutator_predicted)
            && self.anticommutator_actual.is_subset(&self.anticommutator_predicted)
    }
}

fn grade_of(u: &Multivector, eps: f64) -> Result<usize> {
    let found = u.grade_support(eps);
    match found.as_slice() {
        [k] => Ok(*k),
        [] => Ok(0),
        _ => Err(CliffordError::NotHomogeneous {
            expected: None,
            found,
        }),
    }
}

/// Computes both brackets of homogeneous `U`, `V` and compares their grade
/// supports with [`predicted_support`]. The zero element counts as grade 0.
pub fn check_support(u: &Multivector, v: &Multivector, eps: f64) -> Result<SupportCheck> {
    let n = u.signature().n();
    let (k, l) = (grade_of(u, eps)?, grade_of(v, eps)?);
    let c = u.commutator(v)?;
    let a = u.anticommutator(v)?;
    Ok(SupportCheck {
        k,
        l,
        commutator_predicted: predicted_support(k, l, Bracket::Commutator, n),
        commutator_actual: GradeSupport::from_grades(c.grade_support(eps)),
        anticommutator_predicted: predicted_support(k, l, Bracket::Anticommutator, n),
        anticommutator_actual: GradeSupport::from_grades(a.grade_support(eps)),
    })
}

/// Union of the grade supports of the bracket over all blade pairs of grades
/// `(k, l)`. Blade brackets are exact, so no tolerance is involved.
pub fn maximal_support(sig: &Signature, k: usize, l: usize, bracket: Bracket) -> GradeSupport {
    let n = sig.n();
    let mut out = BTreeSet::new();
    let lefts: Vec<BladeIndex> = BladeIndex::of_grade(n, k).collect();
    let rights: Vec<BladeIndex> = BladeIndex::of_grade(n, l).collect();
    for a in &lefts {
        for b in &rights {
            let (m, s1) = crate::algebra::blade_product(sig, a.mask(), b.mask());
            let (_, s2) = crate::algebra::blade_product(sig, b.mask(), a.mask());
            let nonzero = match bracket {
                Bracket::Commutator => s1 != s2,
                Bracket::Anticommutator => s1 == s2,
            };
            if nonzero {
                out.insert(m.count_ones() as usize);
            }
        }
    }
    GradeSupport(out)
}

/// Exhaustive check over every blade pair of a signature. Returns the pairs
/// whose bracket supports escape the prediction, as `(A, B, bracket)`.
pub fn exhaustive_support_violations(sig: &Signature) -> Vec<(BladeIndex, BladeIndex, Bracket)> {
    let n = sig.n();
    let mut bad = Vec::new();
    for a in 0..sig.dim() as u32 {
        for b in 0..sig.dim() as u32 {
            let (m, s1) = crate::algebra::blade_product(sig, a, b);
            let (_, s2) = crate::algebra::blade_product(sig, b, a);
            let g = m.count_ones() as usize;
            let (k, l) = (a.count_ones() as usize, b.count_ones() as usize);
            for (bracket, nonzero) in [
                (Bracket::Commutator, s1 != s2),
                (Bracket::Anticommutator, s1 == s2),
            ] {
                if nonzero && !predicted_support(k, l, bracket, n).0.contains(&g) {
                    bad.push((BladeIndex(a), BladeIndex(b), bracket));
                }
            }
        }
    }
    bad
}

/// One row of the table of bracket ranks for `1 <= l <= k <= 4`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankTableRow {
    pub k: usize,
    pub l: usize,
    /// Commutator grades as printed.
    pub printed_commutator: GradeSupport,
    /// Anticommutator grades as printed.
    pub printed_anticommutator: GradeSupport,
}

/// The printed rank table, rows `(k, l)` with `k >= l`.
pub fn printed_rank_table() -> Vec<RankTableRow> {
    let rows: [(usize, usize, &[usize], &[usize]); 10] = [
        (1, 1, &[1], &[0]),
        (2, 1, &[2], &[3]),
        (2, 2, &[2], &[0, 4]),
        (3, 1, &[3], &[2]),
        (3, 2, &[3], &[1, 5]),
        (3, 3, &[3, 6], &[0, 4]),
        (4, 1, &[4], &[5]),
        (4, 2, &[4], &[2, 6]),
        (4, 3, &[4, 5], &[3, 7]),
        (4, 4, &[4, 6], &[0, 4, 8]),
    ];
    rows.iter()
        .map(|(k, l, c, a)| RankTableRow {
            k: *k,
            l: *l,
            printed_commutator: GradeSupport::from_grades(c.iter().copied()),
            printed_anticommutator: GradeSupport::from_grades(a.iter().copied()),
        })
        .collect()
}

/// Comparison of one rank-table row with computation at `n = 8`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankTableComparison {
    pub k: usize,
    pub l: usize,
    pub commutator_computed: GradeSupport,
    pub commutator_predicted: GradeSupport,
    pub commutator_printed: GradeSupport,
    pub anticommutator_computed: GradeSupport,
    pub anticommutator_predicted: GradeSupport,
    pub anticommutator_printed: GradeSupport,
}

impl RankTableComparison {
    /// Computed maximal supports equal the case formulas for both brackets.
    pub fn matches_prediction(&self) -> bool {
        self.commutator_computed == self.commutator_predicted
            && self.anticommutator_computed == self.anticommutator_predicted
    }

    pub fn matches_printed_anticommutator(&self) -> bool {
        self.anticommutator_computed == self.anticommutator_printed
    }

    pub fn matches_printed_commutator(&self) -> bool {
        self.commutator_computed == self.commutator_printed
    }
}

/// Maximal supports at `n = 8` (signature `sig`, which must have `n >= 8`
/// for the table to be unclipped) next to the prediction and the print.
pub fn rank_table_comparison(sig: &Signature) -> Vec<RankTableComparison> {
    let n = sig.n();
    printed_rank_table()
        .into_iter()
        .map(|row| RankTableComparison {
            k: row.k,
            l: row.l,
            commutator_computed: maximal_support(sig, row.k, row.l, Bracket::Commutator),
            commutator_predicted: predicted_support(row.k, row.l, Bracket::Commutator, n),
            commutator_printed: row.printed_commutator,
            anticommutator_computed: maximal_support(sig, row.k, row.l, Bracket::Anticommutator),
            anticommutator_predicted: predicted_support(row.k, row.l, Bracket::Anticommutator, n),
            anticommutator_printed: row.printed_anticommutator,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: &[usize]) -> GradeSupport {
        GradeSupport::from_grades(x.iter().copied())
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(predicted_support(2, 2, Bracket::Commutator, 4), g(&[2]));
        assert_eq!(predicted_support(4, 4, Bracket::Anticommutator, 8), g(&[0, 4, 8]));
        assert_eq!(predicted_support(1, 1, Bracket::Commutator, 3), g(&[2]));
        assert_eq!(predicted_support(1, 1, Bracket::Anticommutator, 3), g(&[0]));
        assert_eq!(predicted_support(3, 3, Bracket::Anticommutator, 3), g(&[0]));
        // swapped arguments
        assert_eq!(
            predicted_support(1, 4, Bracket::Anticommutator, 8),
            predicted_support(4, 1, Bracket::Anticommutator, 8)
        );
    }

    #[test]
    fn check_support_examples() {
        let s = Signature::complex(4, 0).unwrap();
        let r = check_support(
            &Multivector::blade(s, &[1, 2]).unwrap(),
            &Multivector::blade(s, &[3, 4]).unwrap(),
            1e-9,
        )
        .unwrap();
        assert!(r.commutator_actual.0.is_empty() && r.holds());

        let s = Signature::complex(3, 0).unwrap();
        let u = Multivector::blade(s, &[1, 2, 3]).unwrap();
        let r = check_support(&u, &u, 1e-9).unwrap();
        assert!(r.anticommutator_actual.is_subset(&g(&[0])) && r.holds());

        let e1 = Multivector::generator(s, 1).unwrap();
        let r = check_support(&e1, &Multivector::volume_element(s), 1e-9).unwrap();
        assert!(r.commutator_actual.0.is_empty());

        let mixed = &e1 + &u;
        assert!(check_support(&mixed, &e1, 1e-9).is_err());
    }

    #[test]
    fn exhaustive_small() {
        for s in Signature::all_up_to(4, crate::Field::Real).unwrap() {
            assert!(exhaustive_support_violations(&s).is_empty(), "{s}");
        }
    }
}
