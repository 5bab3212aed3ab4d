//! Slow, direct oracles shared by the integration tests. Nothing here calls
//! the library's blade arithmetic.

#![allow(dead_code)]

use cliffalg_core::{BladeIndex, Multivector, Signature};
use num_complex::Complex64;

pub fn metric(sig: &Signature, a: usize) -> f64 {
    if a <= sig.p() {
        1.0
    } else {
        -1.0
    }
}

/// Rewrites a word in the generators into a sorted blade using only
/// `e^a e^b = -e^b e^a` (a != b) and `e^a e^a = eta_aa`.
pub fn reduce_word(sig: &Signature, word: &[usize]) -> (f64, Vec<usize>) {
    let mut w = word.to_vec();
    let mut sign = 1.0;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < w.len() {
            if w[i] == w[i + 1] {
                sign *= metric(sig, w[i]);
                w.drain(i..i + 2);
                changed = true;
            } else if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                sign = -sign;
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
        if !changed {
            return (sign, w);
        }
    }
}

pub fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().map(|a| 1u32 << (a - 1)).sum()
}

pub fn indices_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Product of basis blades by word rewriting.
pub fn oracle_blade_product(sig: &Signature, a: u32, b: u32) -> (f64, u32) {
    let mut word = indices_of(a);
    word.extend(indices_of(b));
    let (s, w) = reduce_word(sig, &word);
    (s, mask_of(&w))
}

pub fn oracle_product(u: &Multivector, v: &Multivector) -> Multivector {
    let sig = u.signature();
    let mut out = Multivector::zero(sig);
    for (a, ca) in u.coeffs().iter().enumerate() {
        if *ca == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (b, cb) in v.coeffs().iter().enumerate() {
            if *cb == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (s, m) = oracle_blade_product(&sig, a as u32, b as u32);
            let blade = BladeIndex(m);
            out.set_coeff(blade, out.coeff(blade) + ca * cb * s);
        }
    }
    out
}

/// `(e^{a1..ak})^dagger = e_{ak} .. e_{a1}`, extended antilinearly.
pub fn oracle_dagger(u: &Multivector) -> Multivector {
    let sig = u.signature();
    let mut out = Multivector::zero(sig);
    for (a, c) in u.coeffs().iter().enumerate() {
        let mut word = indices_of(a as u32);
        word.reverse();
        let lowering: f64 = word.iter().map(|&i| metric(&sig, i)).product();
        let (s, w) = reduce_word(&sig, &word);
        let blade = BladeIndex(mask_of(&w));
        out.set_coeff(blade, out.coeff(blade) + c.conj() * (s * lowering));
    }
    out
}

/// `e^{a1..ak} -> e^{ak..a1}` with conjugated coefficients.
pub fn oracle_clifford_conjugate(u: &Multivector) -> Multivector {
    let sig = u.signature();
    let mut out = Multivector::zero(sig);
    for (a, c) in u.coeffs().iter().enumerate() {
        let mut word = indices_of(a as u32);
        word.reverse();
        let (s, w) = reduce_word(&sig, &word);
        out.set_coeff(BladeIndex(mask_of(&w)), c.conj() * s);
    }
    out
}

pub fn oracle_grade_involution(u: &Multivector) -> Multivector {
    let mut out = u.clone();
    for (a, c) in u.coeffs().iter().enumerate() {
        if (a as u32).count_ones() % 2 == 1 {
            out.set_coeff(BladeIndex(a as u32), -c);
        }
    }
    out
}

/// `Tr(U^dagger V)`.
pub fn oracle_scalar_product(u: &Multivector, v: &Multivector) -> Complex64 {
    oracle_product(&oracle_dagger(u), v).coeff(BladeIndex::SCALAR)
}

fn permutations(items: &[usize]) -> Vec<(Vec<usize>, f64)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), 1.0)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        let s = if i % 2 == 0 { 1.0 } else { -1.0 };
        for (mut p, ps) in permutations(&rest) {
            p.insert(0, x);
            out.push((p, s * ps));
        }
    }
    out
}

fn levi_civita(idx: &[usize]) -> f64 {
    let mut v = idx.to_vec();
    let mut s = 1.0;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return 0.0;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                s = -s;
            }
        }
    }
    s
}

/// `(*U)_{b1..b_{n-k}} = (1/k!) sum eps_{a1..ak b1..b_{n-k}} U^{a1..ak}`
/// with `U^{a1..ak}` antisymmetric and indices lowered by `eta`.
pub fn oracle_hodge(u: &Multivector) -> Multivector {
    let sig = u.signature();
    let n = sig.n();
    let mut out = Multivector::zero(sig);
    for (a, c) in u.coeffs().iter().enumerate() {
        if *c == Complex64::new(0.0, 0.0) {
            continue;
        }
        let idx = indices_of(a as u32);
        let k = idx.len();
        let comp: Vec<usize> = (1..=n).filter(|i| !idx.contains(i)).collect();
        let lower: f64 = idx.iter().map(|&i| metric(&sig, i)).product();
        let fact: f64 = (1..=k).map(|x| x as f64).product();
        let mut total = 0.0;
        for (perm, ps) in permutations(&idx) {
            let mut full = perm.clone();
            full.extend(&comp);
            // U^{perm} = sign(perm) U^{idx}
            total += levi_civita(&full) * ps;
        }
        let blade = BladeIndex(mask_of(&comp));
        out.set_coeff(blade, out.coeff(blade) + c * (lower * total / fact));
    }
    out
}

/// Grades allowed for the bracket of grades `k` and `l`, read directly off
/// the case list (ranks step by 4, clipped to `0..=n`).
pub fn oracle_support(k: usize, l: usize, commutator: bool, n: usize) -> Vec<usize> {
    let (k, l) = (k.max(l) as i64, k.min(l) as i64);
    let (lo, hi) = match (commutator, l % 2 == 0, k % 2 == 0) {
        (true, true, _) => (k - l + 2, k + l - 2),
        (true, false, true) => (k - l, k + l - 2),
        (true, false, false) => (k - l + 2, k + l),
        (false, true, _) => (k - l, k + l),
        (false, false, true) => (k - l + 2, k + l),
        (false, false, false) => (k - l, k + l - 2),
    };
    (0..)
        .map(|i| lo + 4 * i)
        .take_while(|&g| g <= hi)
        .filter(|&g| g >= 0 && g <= n as i64)
        .map(|g| g as usize)
        .collect()
}

pub fn signatures_up_to(max_n: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for p in (0..=n).rev() {
            out.push(Signature::complex(p, n - p).unwrap());
        }
    }
    out
}
