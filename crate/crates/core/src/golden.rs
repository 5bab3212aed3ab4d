//! Tabulated generator matrices for `n = 1..5` and the Dirac form of `(1,3)`.
//!
//! Entries are `0, 1, -1, i, -i`; rows are separated by `;`. Odd-`n`
//! matrices of size 8 are written as their two diagonal `4 x 4` blocks.

use num_complex::Complex64;

use crate::algebra::Signature;
use crate::error::{CliffordError, Result};
use crate::ideals::Preset;
use crate::linalg::ComplexMatrix;

fn entry(tok: &str) -> Complex64 {
    match tok {
        "0" => Complex64::new(0.0, 0.0),
        "1" => Complex64::new(1.0, 0.0),
        "-1" => Complex64::new(-1.0, 0.0),
        "i" => Complex64::new(0.0, 1.0),
        "-i" => Complex64::new(0.0, -1.0),
        _ => panic!("bad table entry `{tok}`"),
    }
}

fn m(text: &str) -> ComplexMatrix {
    let rows: Vec<Vec<Complex64>> = text
        .split(';')
        .map(|r| r.split_whitespace().map(entry).collect())
        .collect();
    ComplexMatrix::from_rows(&rows).expect("table matrices are square")
}

fn diag(text: &str) -> ComplexMatrix {
    let d: Vec<Complex64> = text.split_whitespace().map(entry).collect();
    ComplexMatrix::diagonal(&d)
}

fn blocks(upper: &str, lower: &str) -> ComplexMatrix {
    let (a, b) = (m(upper), m(lower));
    let h = a.dim();
    ComplexMatrix::from_fn(2 * h, |i, j| match (i < h, j < h) {
        (true, true) => a.get(i, j),
        (false, false) => b.get(i - h, j - h),
        _ => Complex64::new(0.0, 0.0),
    })
}

fn twin(block: &str) -> ComplexMatrix {
    blocks(block, block)
}

/// Signatures with a tabulated `paper` preset, followed by `(1,3)` Dirac.
pub fn golden_cases() -> Vec<(Signature, Preset)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for p in (0..=n).rev() {
            out.push((Signature::complex(p, n - p).expect("n <= 5"), Preset::Paper));
        }
    }
    out.push((Signature::complex(1, 3).expect("valid"), Preset::Dirac));
    out
}

/// The tabulated `gamma(e^1) .. gamma(e^n)` for a signature and preset.
pub fn golden_matrices(sig: &Signature, preset: Preset) -> Result<Vec<ComplexMatrix>> {
    let key = (sig.p(), sig.q());
    let unlisted = || CliffordError::UnknownPreset {
        preset: preset.name().to_string(),
        p: sig.p(),
        q: sig.q(),
    };
    if preset == Preset::Dirac {
        if key != (1, 3) {
            return Err(unlisted());
        }
        return Ok(vec![
            diag("1 1 -1 -1"),
            m("0 0 0 1; 0 0 1 0; 0 -1 0 0; -1 0 0 0"),
            m("0 0 0 -i; 0 0 i 0; 0 i 0 0; -i 0 0 0"),
            m("0 0 1 0; 0 0 0 -1; -1 0 0 0; 0 1 0 0"),
        ]);
    }
    if preset != Preset::Paper {
        return Err(unlisted());
    }

    // n = 4 building blocks
    let d4 = diag("1 1 -1 -1");
    let e2a = m("0 0 1 0; 0 0 0 1; 1 0 0 0; 0 1 0 0");
    let e3a = m("0 0 i 0; 0 0 0 -i; -i 0 0 0; 0 i 0 0");
    let e4b = m("0 0 0 -1; 0 0 -1 0; 0 1 0 0; 1 0 0 0");
    let e2c = m("0 0 -1 0; 0 0 0 1; 1 0 0 0; 0 -1 0 0");
    let e3c = m("0 0 i 0; 0 0 0 i; i 0 0 0; 0 i 0 0");

    // n = 3 building blocks
    let d3 = diag("1 -1 -1 1");
    let swap = m("0 1 0 0; 1 0 0 0; 0 0 0 1; 0 0 1 0");
    let rot = m("0 -1 0 0; 1 0 0 0; 0 0 0 1; 0 0 -1 0");
    let irot = m("0 -i 0 0; -i 0 0 0; 0 0 0 i; 0 0 i 0");

    // n = 5 building blocks
    let s50 = [
        diag("1 1 -1 -1 -1 -1 1 1"),
        twin("0 0 1 0; 0 0 0 1; 1 0 0 0; 0 1 0 0"),
        twin("0 0 i 0; 0 0 0 -i; -i 0 0 0; 0 i 0 0"),
        twin("0 0 0 1; 0 0 -1 0; 0 -1 0 0; 1 0 0 0"),
        twin("0 0 0 -i; 0 0 -i 0; 0 i 0 0; i 0 0 0"),
    ];
    let s32e1 = diag("1 -1 -1 1 1 -1 -1 1");
    let s32e4 = twin("0 0 -1 0; 0 0 0 1; 1 0 0 0; 0 -1 0 0");
    let s32e5 = twin("0 0 -i 0; 0 0 0 i; -i 0 0 0; 0 i 0 0");
    let s14e2 = blocks(
        "0 -1 0 0; 1 0 0 0; 0 0 0 -1; 0 0 1 0",
        "0 1 0 0; -1 0 0 0; 0 0 0 1; 0 0 -1 0",
    );
    let s14e3 = twin("0 i 0 0; i 0 0 0; 0 0 0 i; 0 0 i 0");

    let mats = match key {
        (1, 0) => vec![diag("1 -1")],
        (0, 1) => vec![diag("i -i")],
        (2, 0) => vec![diag("1 -1"), m("0 1; 1 0")],
        (1, 1) => vec![diag("1 -1"), m("0 -1; 1 0")],
        (0, 2) => vec![diag("-i i"), m("0 -1; 1 0")],
        (3, 0) => vec![d3, swap, m("0 -i 0 0; i 0 0 0; 0 0 0 -i; 0 0 i 0")],
        (2, 1) => vec![d3, swap, m("0 -1 0 0; 1 0 0 0; 0 0 0 -1; 0 0 1 0")],
        (1, 2) => vec![d3, rot, irot],
        (0, 3) => vec![diag("-i i i -i"), rot, irot],
        (4, 0) => vec![d4, e2a, e3a, m("0 0 0 1; 0 0 -1 0; 0 -1 0 0; 1 0 0 0")],
        (3, 1) => vec![d4, e2a, e3a, e4b],
        (2, 2) => vec![d4, e2a, e2c.clone(), e4b],
        (1, 3) => vec![d4, e2c, e3c, e4b],
        (0, 4) => vec![diag("-i -i i i"), e2c, e3c, e4b],
        (5, 0) => s50.to_vec(),
        (4, 1) => {
            let mut v = s50[..4].to_vec();
            v.push(twin("0 0 0 1; 0 0 1 0; 0 -1 0 0; -1 0 0 0"));
            v
        }
        (3, 2) => vec![
            s32e1,
            twin("0 1 0 0; 1 0 0 0; 0 0 0 1; 0 0 1 0"),
            blocks(
                "0 i 0 0; -i 0 0 0; 0 0 0 i; 0 0 -i 0",
                "0 -i 0 0; i 0 0 0; 0 0 0 -i; 0 0 i 0",
            ),
            s32e4,
            s32e5,
        ],
        (2, 3) => vec![
            s32e1,
            twin("0 1 0 0; 1 0 0 0; 0 0 0 1; 0 0 1 0"),
            s14e2.clone(),
            s32e4,
            s32e5,
        ],
        (1, 4) => vec![s32e1, s14e2, s14e3, s32e4, s32e5],
        (0, 5) => vec![diag("-i i i -i -i i i -i"), s14e2, s14e3, s32e4, s32e5],
        _ => return Err(unlisted()),
    };
    Ok(mats)
}
