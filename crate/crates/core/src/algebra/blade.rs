use std::cmp::Ordering;
use std::fmt;

use super::Signature;
use crate::error::{CliffordError, Result};

/// A canonical basis blade `e^{a_1...a_k}`, `a_1 < ... < a_k`, stored as a
/// bit mask: bit `a-1` is set iff generator `e^a` is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BladeIndex(pub u32);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);

    /// Builds a blade from 1-based, strictly increasing generator indices.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        let mut prev = 0usize;
        for &a in indices {
            if a == 0 || a > n {
                return Err(CliffordError::IndexOutOfRange { index: a, n });
            }
            if a <= prev {
                return Err(CliffordError::NonIncreasingIndices(indices.to_vec()));
            }
            prev = a;
            mask |= 1 << (a - 1);
        }
        Ok(BladeIndex(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Ascending 1-based generator indices.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// Order used for display and serialization: by grade, then
    /// lexicographically by index list.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(&other.indices()))
    }

    /// All `2^n` blades in display order.
    pub fn all_in_display_order(n: usize) -> Vec<BladeIndex> {
        let mut v: Vec<BladeIndex> = (0..1u32 << n).map(BladeIndex).collect();
        v.sort_by(BladeIndex::display_cmp);
        v
    }

    /// All blades of grade `k` among `n` generators, in mask order.
    pub fn of_grade(n: usize, k: usize) -> impl Iterator<Item = BladeIndex> {
        (0..1u32 << n)
            .filter(move |m| m.count_ones() as usize == k)
            .map(BladeIndex)
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "e");
        }
        write!(f, "e^")?;
        let idx = self.indices();
        if idx.iter().any(|&a| a > 9) {
            let s: Vec<String> = idx.iter().map(|a| a.to_string()).collect();
            write!(f, "{{{}}}", s.join(","))
        } else {
            for a in idx {
                write!(f, "{a}")?;
            }
            Ok(())
        }
    }
}

/// Sign from reordering the concatenation of the sorted index lists of `a`
/// and `b` into ascending order (repeated indices kept adjacent):
/// `(-1)^s`, `s = sum over j in b of #{i in a : i > j}`.
#[inline]
pub fn reorder_sign(a: u32, b: u32) -> i8 {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        // indices of `a` strictly above j
        let above = if j >= 31 { 0 } else { a & !((2u32 << j) - 1) };
        swaps += above.count_ones();
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two basis blades: `e^A e^B = sign * e^{A xor B}`.
#[inline]
pub fn blade_product(sig: &Signature, a: u32, b: u32) -> (u32, i8) {
    let sign = reorder_sign(a, b) * sig.metric_product(a & b);
    (a ^ b, sign)
}

/// Sign of the permutation that sorts `list` (which must have distinct
/// entries), counted by inversions.
pub fn permutation_sign(list: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if list[i] > list[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
