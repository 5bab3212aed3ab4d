use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use super::blade::{blade_product, reorder_sign, BladeIndex};
use super::{Field, Signature};
use crate::error::{CliffordError, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Element of `Cl(p, q)` stored as `2^n` dense complex coefficients indexed by
/// blade mask.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<Complex64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![ZERO; sig.dim()],
        }
    }

    /// `c * e`.
    pub fn scalar(sig: Signature, c: impl Into<Complex64>) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = c.into();
        m
    }

    /// The unit `e`.
    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, ONE)
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != sig.dim() {
            return Err(CliffordError::CoefficientLength {
                expected: sig.dim(),
                found: coeffs.len(),
            });
        }
        let m = Multivector { sig, coeffs };
        m.check_field(crate::DEFAULT_EPS)?;
        Ok(m)
    }

    /// Canonical blade `e^{a_1...a_k}` from strictly increasing 1-based indices.
    pub fn blade(sig: Signature, indices: &[usize]) -> Result<Self> {
        let b = BladeIndex::from_indices(sig.n(), indices)?;
        Ok(Self::basis(sig, b))
    }

    /// Basis element for a mask already known to be in range.
    pub fn basis(sig: Signature, blade: BladeIndex) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[blade.mask() as usize] = ONE;
        m
    }

    /// Generator `e^a`.
    pub fn generator(sig: Signature, a: usize) -> Result<Self> {
        Self::blade(sig, &[a])
    }

    /// Lowered generator `e_a = eta_{ab} e^b`.
    pub fn lowered_generator(sig: Signature, a: usize) -> Result<Self> {
        Ok(Self::generator(sig, a)? * f64::from(sig.metric(a)))
    }

    /// Volume element `l = e^{1...n}`.
    pub fn volume_element(sig: Signature) -> Self {
        Self::basis(sig, BladeIndex(sig.full_mask()))
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn coeff(&self, blade: BladeIndex) -> Complex64 {
        self.coeffs[blade.mask() as usize]
    }

    pub fn set_coeff(&mut self, blade: BladeIndex, c: Complex64) {
        self.coeffs[blade.mask() as usize] = c;
    }

    /// Same coefficients, reinterpreted over another field.
    pub fn with_field(mut self, field: Field) -> Result<Self> {
        self.sig = self.sig.with_field(field);
        self.check_field(crate::DEFAULT_EPS)?;
        Ok(self)
    }

    /// Real-field elements must have vanishing imaginary parts.
    pub fn check_field(&self, eps: f64) -> Result<()> {
        if self.sig.field() == Field::Real {
            let worst = self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
            if worst > eps {
                return Err(CliffordError::ComplexCoefficientInRealField(worst));
            }
        }
        Ok(())
    }

    pub fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    /// Non-zero terms as `(blade, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (BladeIndex, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != ZERO)
            .map(|(m, c)| (BladeIndex(m as u32), *c))
    }

    /// Clifford (geometric) product.
    pub fn clifford_product(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        Ok(self.product_unchecked(other))
    }

    fn product_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.sig);
        let rhs: Vec<(u32, Complex64)> = other.terms().map(|(b, c)| (b.mask(), c)).collect();
        for (a, ca) in self.terms() {
            for &(b, cb) in &rhs {
                let (m, s) = blade_product(&self.sig, a.mask(), b);
                let v = ca * cb;
                if s > 0 {
                    out.coeffs[m as usize] += v;
                } else {
                    out.coeffs[m as usize] -= v;
                }
            }
        }
        out
    }

    /// Exterior product: blades with common generators annihilate,
    /// disjoint blades multiply with the reordering sign.
    pub fn exterior_product(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let mut out = Self::zero(self.sig);
        let rhs: Vec<(u32, Complex64)> = other.terms().map(|(b, c)| (b.mask(), c)).collect();
        for (a, ca) in self.terms() {
            for &(b, cb) in &rhs {
                if a.mask() & b != 0 {
                    continue;
                }
                let v = ca * cb;
                if reorder_sign(a.mask(), b) > 0 {
                    out.coeffs[(a.mask() | b) as usize] += v;
                } else {
                    out.coeffs[(a.mask() | b) as usize] -= v;
                }
            }
        }
        Ok(out)
    }

    /// `[U, V] = UV - VU`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(self.clifford_product(other)? - other.product_unchecked(self))
    }

    /// `{U, V} = UV + VU`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        Ok(self.clifford_product(other)? + other.product_unchecked(self))
    }

    /// Grade projection `<U>_k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        let n = self.sig.n();
        if k > n {
            return Err(CliffordError::GradeOutOfRange { k, n });
        }
        Ok(self.filter_blades(|b| b.grade() == k))
    }

    /// Keeps the coefficients of blades satisfying `keep`.
    pub fn filter_blades(&self, keep: impl Fn(BladeIndex) -> bool) -> Self {
        let mut out = self.clone();
        for (m, c) in out.coeffs.iter_mut().enumerate() {
            if !keep(BladeIndex(m as u32)) {
                *c = ZERO;
            }
        }
        out
    }

    /// Scalar coefficient, `Tr(U) = <U>_0 |_{e -> 1}`.
    pub fn trace(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Grades carrying a coefficient of modulus above `eps`.
    pub fn grade_support(&self, eps: f64) -> Vec<usize> {
        let mut present = vec![false; self.sig.n() + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.norm() > eps {
                present[m.count_ones() as usize] = true;
            }
        }
        present
            .iter()
            .enumerate()
            .filter(|(_, p)| **p)
            .map(|(k, _)| k)
            .collect()
    }

    /// `Some(k)` when all significant coefficients have grade `k`; the zero
    /// element reports `None`.
    pub fn homogeneous_grade(&self, eps: f64) -> Option<usize> {
        match self.grade_support(eps).as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    /// Checks that `self` lies in grade `k`; zero passes.
    pub fn require_grade(&self, k: usize, eps: f64) -> Result<()> {
        let found = self.grade_support(eps);
        if found.iter().all(|&g| g == k) {
            Ok(())
        } else {
            Err(CliffordError::NotHomogeneous {
                expected: Some(k),
                found,
            })
        }
    }

    /// `sum_a e_a U e^a`, with `e_a = eta_{ab} e^b`.
    pub fn generator_contraction(&self) -> Self {
        let sig = self.sig;
        let mut out = Self::zero(sig);
        for a in 1..=sig.n() {
            let up = Self::basis(sig, BladeIndex(1 << (a - 1)));
            let down = up.clone() * f64::from(sig.metric(a));
            out += down.product_unchecked(self).product_unchecked(&up);
        }
        out
    }

    pub fn scale(&self, c: impl Into<Complex64>) -> Self {
        let c = c.into();
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficient-wise modulus of `self - other`; infinite on a
    /// signature mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.sig != other.sig {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.max_abs_diff(other) <= eps
    }

    pub fn is_zero(&self, eps: f64) -> bool {
        self.max_abs() <= eps
    }

    /// `sqrt(sum |u_A|^2)`, which is the norm of the Hermitian scalar
    /// product because the blade basis is orthonormal.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(
            self.sig, other.sig,
            "signature mismatch in multivector arithmetic"
        );
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut blades: Vec<BladeIndex> = self.terms().map(|(b, _)| b).collect();
        if blades.is_empty() {
            return write!(f, "0");
        }
        blades.sort_by(BladeIndex::display_cmp);
        for (i, b) in blades.iter().enumerate() {
            let c = self.coeff(*b);
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            write!(f, " {b}")?;
        }
        Ok(())
    }
}

// Operator impls panic on signature mismatch; the named methods return errors.

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in multivector arithmetic");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign for Multivector {
    fn sub_assign(&mut self, rhs: Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in multivector arithmetic");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<Complex64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Complex64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<&Multivector> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in Clifford product");
        self.product_unchecked(rhs)
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}
