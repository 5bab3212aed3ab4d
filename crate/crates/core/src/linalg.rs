//! Dense complex matrices: the image of the representation maps.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CliffordError, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Square complex matrix; entry `(k, l)` is row `k`, column `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    pub fn zeros(d: usize) -> Self {
        ComplexMatrix(DMatrix::from_element(d, d, ZERO))
    }

    pub fn identity(d: usize) -> Self {
        ComplexMatrix(DMatrix::identity(d, d))
    }

    pub fn from_fn(d: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        ComplexMatrix(DMatrix::from_fn(d, d, f))
    }

    /// From row vectors, which must form a square array.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let d = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != d) {
            return Err(CliffordError::DimensionMismatch(d, r.len()));
        }
        Ok(Self::from_fn(d, |i, j| rows[i][j]))
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(entries: &[Complex64]) -> Self {
        Self::from_fn(entries.len(), |i, j| if i == j { entries[i] } else { ZERO })
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.0[(row, col)] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn as_nalgebra(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn adjoint(&self) -> Self {
        ComplexMatrix(self.0.adjoint())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix(&self.0 * c)
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    /// Checked product.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(CliffordError::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(ComplexMatrix(&self.0 * &other.0))
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let x = DVector::from_column_slice(v);
        (&self.0 * x).iter().copied().collect()
    }

    /// LU with partial pivoting.
    pub fn determinant(&self) -> Complex64 {
        self.0.clone().lu().determinant()
    }

    pub fn inverse(&self) -> Result<Self> {
        self.0
            .clone()
            .lu()
            .try_inverse()
            .map(ComplexMatrix)
            .ok_or(CliffordError::Singular)
    }

    /// Eigenvalues with multiplicity, sorted by real then imaginary part.
    /// Hermitian input (within `eps`) goes through the Hermitian solver and
    /// yields exactly real eigenvalues.
    pub fn eigenvalues(&self, eps: f64) -> Result<Vec<Complex64>> {
        let d = self.dim();
        let mut out: Vec<Complex64> = if self.is_hermitian(eps) {
            let h = ComplexMatrix((&self.0 + self.0.adjoint()) * Complex64::new(0.5, 0.0));
            h.0.symmetric_eigenvalues()
                .iter()
                .map(|&x| Complex64::new(x, 0.0))
                .collect()
        } else {
            let max_iter = 100 * d.max(1);
            let schur = nalgebra::linalg::Schur::try_new(self.0.clone(), 1e-12, max_iter)
                .ok_or(CliffordError::NoConvergence(max_iter))?;
            let ev = schur
                .eigenvalues()
                .ok_or(CliffordError::NoConvergence(max_iter))?;
            ev.iter().copied().collect()
        };
        out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        Ok(out)
    }

    /// Numerical rank from singular values, counting those above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.0.rank(tol)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of the difference; infinite on a size mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.max_abs_diff(other) <= eps
    }

    pub fn is_hermitian(&self, eps: f64) -> bool {
        self.approx_eq(&self.adjoint(), eps)
    }

    /// `max |M^dagger M - 1|`.
    pub fn unitarity_residual(&self) -> f64 {
        ComplexMatrix(self.0.adjoint() * &self.0).max_abs_diff(&Self::identity(self.dim()))
    }

    /// Largest entry outside the two diagonal `d/2 x d/2` blocks.
    pub fn off_block_max(&self) -> f64 {
        let d = self.dim();
        let h = d / 2;
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                if (i < h) != (j < h) {
                    worst = worst.max(self.get(i, j).norm());
                }
            }
        }
        worst
    }

    pub fn is_two_block_diagonal(&self, eps: f64) -> bool {
        self.dim() % 2 == 0 && self.off_block_max() <= eps
    }

    /// Upper-left (`upper = true`) or lower-right half-size block.
    pub fn diagonal_block(&self, upper: bool) -> Self {
        let h = self.dim() / 2;
        let off = if upper { 0 } else { h };
        Self::from_fn(h, |i, j| self.get(i + off, j + off))
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        ComplexMatrix(&self.0 * &other.0 - &other.0 * &self.0)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

/// Panics on a dimension mismatch; `matmul` is the checked form.
impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 * &rhs.0)
    }
}

/// Renders an entry as `0`, `±1`, `±i` when within `eps`, otherwise numerically.
pub fn format_entry(c: Complex64, eps: f64) -> String {
    for (v, s) in [
        (ZERO, "0"),
        (ONE, "1"),
        (-ONE, "-1"),
        (Complex64::new(0.0, 1.0), "i"),
        (Complex64::new(0.0, -1.0), "-i"),
    ] {
        if (c - v).norm() <= eps {
            return s.to_string();
        }
    }
    if c.im.abs() <= eps {
        format!("{:.6}", c.re)
    } else if c.re.abs() <= eps {
        format!("{:.6}i", c.im)
    } else {
        format!("{:.6}{:+.6}i", c.re, c.im)
    }
}

impl ComplexMatrix {
    /// Row-per-line layout with aligned columns.
    pub fn pretty(&self, eps: f64) -> String {
        let cells: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|c| format_entry(*c, eps)).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells {
            out.push_str("  (");
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            out.push_str(&padded.join(" "));
            out.push_str(")\n");
        }
        out
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty(crate::DEFAULT_EPS))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    d: usize,
    rows: Vec<Vec<[f64; 2]>>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            d: self.dim(),
            rows: self
                .rows()
                .iter()
                .map(|r| r.iter().map(|c| [c.re, c.im]).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = MatrixJson::deserialize(d)?;
        let rows: Vec<Vec<Complex64>> = m
            .rows
            .iter()
            .map(|r| r.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
            .collect();
        if rows.len() != m.d {
            return Err(serde::de::Error::custom(format!(
                "declared d = {} but found {} rows",
                m.d,
                rows.len()
            )));
        }
        ComplexMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}
