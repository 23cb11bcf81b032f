//! Vector-matrix realization of the Hurwitz algebras.
//!
//! An element `x_0 + x⃗` is written as the 2×2 array
//!
//! ```text
//! | x_0  x⃗  |
//! | x⃗   x_0 |
//! ```
//!
//! with equal diagonal and equal off-diagonal entries. Only the pair
//! `(x_0, x⃗)` is stored. Two such arrays multiply by the diamond rule
//!
//! ```text
//! scalar = x_0 y_0 + x⃗ • y⃗
//! vector = x_0 y⃗ + y_0 x⃗ + x⃗ × y⃗
//! ```
//!
//! where `•` is the negative-definite dot product (`e_i • e_j = -δ_ij`) and
//! `×` is the cross product whose structure constants are read off the
//! multiplication table. With `×` taken from the tables the diamond product
//! reproduces the table product exactly, which the tests check basis pair by
//! basis pair.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::AlgebraKind;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::tables::StructureConstants;

/// A vector matrix `(x_0, x⃗)` over one of the Hurwitz algebras.
///
/// `vec` always has length `kind.dim() - 1`; unused slots stay zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorMatrix {
    kind: AlgebraKind,
    scalar: f64,
    vec: [f64; 7],
}

/// Both dot-product conventions side by side. `paper_dot` is the one the
/// diamond product uses and is always `-euclidean`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DotValue {
    pub paper_dot: f64,
    pub euclidean: f64,
}

impl VectorMatrix {
    pub fn new(kind: AlgebraKind, scalar: f64, vec: &[f64]) -> Result<Self> {
        check_len(kind, vec)?;
        let mut v = [0.0; 7];
        v[..vec.len()].copy_from_slice(vec);
        Ok(Self {
            kind,
            scalar,
            vec: v,
        })
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        Self {
            kind,
            scalar: 0.0,
            vec: [0.0; 7],
        }
    }

    /// The unit `embed(e_0)`.
    pub fn one(kind: AlgebraKind) -> Self {
        Self::from_scalar(kind, 1.0)
    }

    pub fn from_scalar(kind: AlgebraKind, scalar: f64) -> Self {
        Self {
            scalar,
            ..Self::zero(kind)
        }
    }

    /// `embed(e_index)`.
    pub fn basis(kind: AlgebraKind, index: usize) -> Result<Self> {
        Element::basis(kind, index).map(|e| embed(&e))
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn scalar(&self) -> f64 {
        self.scalar
    }

    pub fn vec(&self) -> &[f64] {
        &self.vec[..self.kind.vec_len()]
    }

    fn vec_mut(&mut self) -> &mut [f64] {
        let n = self.kind.vec_len();
        &mut self.vec[..n]
    }

    /// The full 2×2 array, for display only: `[[x_0, x⃗], [x⃗, x_0]]`, each
    /// entry as an element. No arithmetic goes through this form.
    pub fn materialize_2x2(&self) -> [[Element; 2]; 2] {
        let diag = Element::scalar(self.kind, self.scalar);
        let mut off = extract(self);
        off.coeffs_mut()[0] = 0.0;
        [[diag, off], [off, diag]]
    }

    pub fn scale(mut self, factor: f64) -> Self {
        self.scalar *= factor;
        for c in self.vec_mut() {
            *c *= factor;
        }
        self
    }

    /// Largest absolute coefficient over scalar and vector parts.
    pub fn max_abs(&self) -> f64 {
        self.vec()
            .iter()
            .fold(self.scalar.abs(), |m, c| m.max(c.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.scalar == 0.0 && self.vec().iter().all(|&c| c == 0.0)
    }

    pub fn involute(&self) -> Self {
        involute(self)
    }

    pub fn trace(&self) -> f64 {
        trace(self)
    }

    pub fn real_part(&self) -> f64 {
        real_part(self)
    }

    pub fn norm(&self) -> f64 {
        norm(self)
    }

    pub fn inverse(&self) -> Result<Self> {
        inverse(self)
    }

    fn zip_with(self, rhs: Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(self.kind, rhs.kind, "algebra mismatch");
        let mut out = self;
        out.scalar = f(self.scalar, rhs.scalar);
        for (o, r) in out.vec_mut().iter_mut().zip(rhs.vec()) {
            *o = f(*o, *r);
        }
        out
    }
}

fn check_len(kind: AlgebraKind, v: &[f64]) -> Result<()> {
    if v.len() != kind.vec_len() {
        return Err(Error::LengthMismatch {
            expected: kind.vec_len(),
            found: v.len(),
        });
    }
    Ok(())
}

fn check_kinds(a: AlgebraKind, b: AlgebraKind) -> Result<()> {
    if a != b {
        return Err(Error::KindMismatch { left: a, right: b });
    }
    Ok(())
}

pub fn embed(a: &Element) -> VectorMatrix {
    let c = a.coeffs();
    let mut vec = [0.0; 7];
    vec[..c.len() - 1].copy_from_slice(&c[1..]);
    VectorMatrix {
        kind: a.kind(),
        scalar: c[0],
        vec,
    }
}

pub fn extract(x: &VectorMatrix) -> Element {
    Element::from_fn(x.kind, |i| if i == 0 { x.scalar } else { x.vec[i - 1] })
}

/// Dot product of two vector parts under both sign conventions.
pub fn dot(kind: AlgebraKind, x: &[f64], y: &[f64]) -> Result<DotValue> {
    check_len(kind, x)?;
    check_len(kind, y)?;
    let euclidean = euclidean_dot(x, y);
    Ok(DotValue {
        paper_dot: -euclidean,
        euclidean,
    })
}

#[inline]
fn euclidean_dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Cross product of two vector parts, with structure constants taken from
/// the multiplication table: for `i ≠ j ≥ 1`, `e_i e_j = s e_k` contributes
/// `s x_i y_j` to component `k`. Zero for the real and complex algebras.
pub fn cross(kind: AlgebraKind, x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    check_len(kind, x)?;
    check_len(kind, y)?;
    let mut out = [0.0; 7];
    cross_into(kind, x, y, &mut out);
    Ok(out[..kind.vec_len()].to_vec())
}

fn cross_into(kind: AlgebraKind, x: &[f64], y: &[f64], out: &mut [f64; 7]) {
    let table = StructureConstants::of(kind);
    let n = kind.vec_len();
    for (i, &xi) in x[..n].iter().enumerate() {
        for (j, &yj) in y[..n].iter().enumerate() {
            if i == j {
                continue;
            }
            let prod = table.get(i + 1, j + 1);
            out[prod.index - 1] += f64::from(prod.sign) * xi * yj;
        }
    }
}

/// The octonion cross product as a hand-expanded closed form of 21
/// antisymmetric terms, transcribed as printed, including the term
/// `(x_6 y_5 - x_5 y_6) e_4`. Kept only to be compared against [`cross`];
/// nothing else calls it.
///
/// Inputs are indexed `x[0] = x_1 .. x[6] = x_7`.
pub fn cross_closed_form_octonion(x: &[f64; 7], y: &[f64; 7]) -> [f64; 7] {
    let c = |i: usize| x[i - 1];
    let d = |i: usize| y[i - 1];
    let t = |a: usize, b: usize| c(a) * d(b) - c(b) * d(a);
    let mut r = [0.0; 8];
    r[1] += t(2, 3);
    r[2] += t(3, 1);
    r[3] += t(1, 2);
    r[4] += t(6, 5);
    r[4] += t(6, 2);
    r[7] += t(2, 5);
    r[1] += t(4, 7);
    r[5] += t(7, 2);
    r[6] += t(2, 4);
    r[2] += t(4, 6);
    r[7] += t(1, 4);
    r[5] += t(1, 6);
    r[2] += t(5, 7);
    r[6] += t(5, 1);
    r[4] += t(7, 1);
    r[3] += t(6, 7);
    r[6] += t(7, 3);
    r[7] += t(3, 6);
    r[3] += t(5, 4);
    r[4] += t(3, 5);
    r[5] += t(4, 3);
    let mut out = [0.0; 7];
    out.copy_from_slice(&r[1..]);
    out
}

/// One basis pair in the comparison of the closed form against the table.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossComparison {
    /// Basis indices `1..=7` of the two factors.
    pub left: usize,
    pub right: usize,
    pub closed_form: [f64; 7],
    pub table: [f64; 7],
}

impl CrossComparison {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.table
    }
}

/// Compares the closed-form octonion cross product against the table-derived
/// one on all 49 pairs of imaginary basis units, in row-major order.
pub fn crosscheck_closed_form() -> Vec<CrossComparison> {
    let mut out = Vec::with_capacity(49);
    for i in 1..=7 {
        for j in 1..=7 {
            let mut x = [0.0; 7];
            let mut y = [0.0; 7];
            x[i - 1] = 1.0;
            y[j - 1] = 1.0;
            let mut table = [0.0; 7];
            cross_into(AlgebraKind::Octonion, &x, &y, &mut table);
            out.push(CrossComparison {
                left: i,
                right: j,
                closed_form: cross_closed_form_octonion(&x, &y),
                table,
            });
        }
    }
    out
}

/// The diamond product.
pub fn diamond(x: &VectorMatrix, y: &VectorMatrix) -> Result<VectorMatrix> {
    check_kinds(x.kind, y.kind)?;
    let kind = x.kind;
    let (xv, yv) = (x.vec(), y.vec());
    let signed_dot = -euclidean_dot(xv, yv);
    let mut vec = [0.0; 7];
    cross_into(kind, xv, yv, &mut vec);
    for k in 0..kind.vec_len() {
        vec[k] += x.scalar * yv[k] + y.scalar * xv[k];
    }
    Ok(VectorMatrix {
        kind,
        scalar: x.scalar * y.scalar + signed_dot,
        vec,
    })
}

/// `(x_0, x⃗) ↦ (x_0, -x⃗)`.
pub fn involute(x: &VectorMatrix) -> VectorMatrix {
    let mut out = *x;
    // `0.0 - c` rather than `-c`, so zero components stay `+0.0`.
    for c in out.vec_mut() {
        *c = 0.0 - *c;
    }
    out
}

/// `X + X̄ = 2 x_0`.
pub fn trace(x: &VectorMatrix) -> f64 {
    2.0 * x.scalar
}

/// `x_0`, i.e. half the trace.
pub fn real_part(x: &VectorMatrix) -> f64 {
    x.scalar
}

/// `N(X) = X ◇ X̄ = x_0² - x⃗ • x⃗ = x_0² + Σ x_i²`.
pub fn norm(x: &VectorMatrix) -> f64 {
    x.scalar * x.scalar + euclidean_dot(x.vec(), x.vec())
}

/// `X̄ / N(X)`.
pub fn inverse(x: &VectorMatrix) -> Result<VectorMatrix> {
    let n = norm(x);
    if n == 0.0 {
        return Err(Error::DivisionByZero);
    }
    Ok(involute(x).scale(1.0 / n))
}

/// `X ◇ X - Tr(X) X + N(X)`, which vanishes identically.
pub fn quadratic_residual(x: &VectorMatrix) -> VectorMatrix {
    let sq = *x * *x;
    sq - x.scale(trace(x)) + VectorMatrix::from_scalar(x.kind, norm(x))
}

impl Add for VectorMatrix {
    type Output = VectorMatrix;

    fn add(self, rhs: Self) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for VectorMatrix {
    type Output = VectorMatrix;

    fn sub(self, rhs: Self) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for VectorMatrix {
    type Output = VectorMatrix;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul<f64> for VectorMatrix {
    type Output = VectorMatrix;

    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

/// Diamond product. Panics if the algebras differ; [`diamond`] is the
/// fallible form.
impl Mul for VectorMatrix {
    type Output = VectorMatrix;

    fn mul(self, rhs: Self) -> Self {
        diamond(&self, &rhs).expect("algebra mismatch")
    }
}

impl From<Element> for VectorMatrix {
    fn from(e: Element) -> Self {
        embed(&e)
    }
}

impl From<VectorMatrix> for Element {
    fn from(x: VectorMatrix) -> Self {
        extract(&x)
    }
}

impl fmt::Display for VectorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        extract(self).fmt(f)
    }
}
