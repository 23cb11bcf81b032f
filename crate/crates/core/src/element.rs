//! Elements as plain coefficient vectors, multiplied straight from the tables.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::algebra::AlgebraKind;
use crate::error::{Error, Result};
use crate::tables::StructureConstants;

/// A real linear combination of the basis units `e_0 .. e_{dim-1}`.
///
/// Coefficients beyond `kind.dim()` are kept at zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Element {
    kind: AlgebraKind,
    coeffs: [f64; 8],
}

impl Element {
    /// Builds an element from exactly `kind.dim()` coefficients.
    pub fn new(kind: AlgebraKind, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != kind.dim() {
            return Err(Error::LengthMismatch {
                expected: kind.dim(),
                found: coeffs.len(),
            });
        }
        let mut c = [0.0; 8];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(Self { kind, coeffs: c })
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        Self {
            kind,
            coeffs: [0.0; 8],
        }
    }

    pub fn one(kind: AlgebraKind) -> Self {
        Self::scalar(kind, 1.0)
    }

    pub fn scalar(kind: AlgebraKind, value: f64) -> Self {
        let mut e = Self::zero(kind);
        e.coeffs[0] = value;
        e
    }

    /// The basis unit `e_index`.
    pub fn basis(kind: AlgebraKind, index: usize) -> Result<Self> {
        if index >= kind.dim() {
            return Err(Error::IndexOutOfRange { index, kind });
        }
        let mut e = Self::zero(kind);
        e.coeffs[index] = 1.0;
        Ok(e)
    }

    pub fn from_fn(kind: AlgebraKind, mut f: impl FnMut(usize) -> f64) -> Self {
        let mut e = Self::zero(kind);
        for (i, c) in e.coeffs[..kind.dim()].iter_mut().enumerate() {
            *c = f(i);
        }
        e
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.kind.dim()]
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        let d = self.kind.dim();
        &mut self.coeffs[..d]
    }

    /// The `e_0` coefficient.
    pub fn re(&self) -> f64 {
        self.coeffs[0]
    }

    /// Sum of squared coefficients.
    pub fn norm_sqr(&self) -> f64 {
        self.coeffs().iter().map(|c| c * c).sum()
    }

    /// Largest absolute coefficient; the residual metric used throughout.
    pub fn max_abs(&self) -> f64 {
        self.coeffs().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0.0)
    }

    pub fn scale(mut self, factor: f64) -> Self {
        for c in self.coeffs_mut() {
            *c *= factor;
        }
        self
    }

    /// `x_0 - x_1 e_1 - ... - x_{d-1} e_{d-1}`.
    pub fn conjugate(mut self) -> Self {
        // `0.0 - c` rather than `-c`, so zero terms stay `+0.0`.
        for c in &mut self.coeffs_mut()[1..] {
            *c = 0.0 - *c;
        }
        self
    }

    fn zip_with(self, rhs: Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.kind, rhs.kind, "algebra mismatch");
        let mut out = self;
        for (o, r) in out.coeffs_mut().iter_mut().zip(rhs.coeffs()) {
            *o = f(*o, *r);
        }
        out
    }
}

/// Bilinear extension of the table: `Σ a_i b_j (e_i e_j)`, accumulated in
/// row-major `(i, j)` order.
pub fn oracle_multiply(a: &Element, b: &Element) -> Result<Element> {
    if a.kind != b.kind {
        return Err(Error::KindMismatch {
            left: a.kind,
            right: b.kind,
        });
    }
    let table = StructureConstants::of(a.kind);
    let mut out = Element::zero(a.kind);
    for (i, j, prod) in table.entries() {
        out.coeffs[prod.index] += f64::from(prod.sign) * a.coeffs[i] * b.coeffs[j];
    }
    Ok(out)
}

pub fn conjugate(a: &Element) -> Element {
    a.conjugate()
}

impl Index<usize> for Element {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coeffs()[i]
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, rhs: Self) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(self, rhs: Self) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul<f64> for Element {
    type Output = Element;

    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

/// Table product. Panics if the algebras differ; use [`oracle_multiply`] for
/// a fallible version.
impl Mul for Element {
    type Output = Element;

    fn mul(self, rhs: Self) -> Self {
        oracle_multiply(&self, &rhs).expect("algebra mismatch")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::literal::format_element(self))
    }
}
