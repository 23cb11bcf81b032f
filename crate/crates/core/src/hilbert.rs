//! Finite-dimensional Hilbert modules over the Hurwitz algebras.
//!
//! A state is a column of `n` algebra elements. The algebra-valued scalar
//! product is
//!
//! ```text
//! (f, g) = Σ_i f̄_i ◇ g_i
//! ```
//!
//! summed for ascending `i`, with the conjugate on the left so that `(f, f)`
//! is the real number `Σ N(f_i)`. From it come:
//!
//! * the real scalar product `(f, g)_R`, the `e_0` coefficient of `(f, g)`;
//! * its quaternion projection form `¼[q - e_1 q e_1 - e_2 q e_2 - e_3 q e_3]`;
//! * the complex scalar product `½[q - e_1 q e_1]`, which lands in
//!   `span{e_0, e_1}` for quaternion and octonion states;
//! * row-times-column expansions of the last two as longer products.
//!
//! The real scalar product is normalized by `x_0` rather than by the trace
//! `2 x_0`, so that `(f, f)_R = Σ N(f_i)`.
//!
//! For octonions a sandwich `e_1 q e_1` needs a grouping. It is computed as
//! `e_1 ◇ (q ◇ e_1)`; flexibility makes the other grouping equal, which the
//! tests check rather than assume.

use std::fmt;

use crate::algebra::AlgebraKind;
use crate::error::{Error, ParseError, Result};
use crate::literal::{format_element, parse_at};
use crate::zorn::{diamond, embed, extract, involute, real_part, VectorMatrix};

#[derive(Debug, Clone, PartialEq)]
pub struct ModuleState {
    kind: AlgebraKind,
    components: Vec<VectorMatrix>,
}

impl ModuleState {
    pub fn new(kind: AlgebraKind, components: Vec<VectorMatrix>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ShapeMismatch(
                "a state needs at least one component".into(),
            ));
        }
        if let Some(c) = components.iter().find(|c| c.kind() != kind) {
            return Err(Error::KindMismatch {
                left: kind,
                right: c.kind(),
            });
        }
        Ok(Self { kind, components })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[VectorMatrix] {
        &self.components
    }

    /// Parses `e0, 1+e1, -e3`: comma-separated element literals.
    pub fn parse(text: &str, kind: AlgebraKind) -> Result<Self, ParseError> {
        let mut offset = 0;
        let mut components = Vec::new();
        for cell in text.split(',') {
            components.push(embed(&parse_at(cell, kind, offset)?));
            offset += cell.len() + 1;
        }
        Ok(Self { kind, components })
    }
}

impl fmt::Display for ModuleState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self
            .components
            .iter()
            .map(|c| format_element(&extract(c)))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

fn check_pair(f: &ModuleState, g: &ModuleState) -> Result<()> {
    if f.kind != g.kind {
        return Err(Error::KindMismatch {
            left: f.kind,
            right: g.kind,
        });
    }
    if f.len() != g.len() {
        return Err(Error::ShapeMismatch(format!(
            "states have {} and {} components",
            f.len(),
            g.len()
        )));
    }
    Ok(())
}

fn unit(kind: AlgebraKind, i: usize) -> VectorMatrix {
    VectorMatrix::basis(kind, i).expect("index below dimension")
}

/// How a two-sided product `a q a` is grouped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grouping {
    /// `a ◇ (q ◇ a)`, the grouping used throughout this module.
    InnerRight,
    /// `(a ◇ q) ◇ a`.
    InnerLeft,
}

pub fn sandwich(a: &VectorMatrix, q: &VectorMatrix, grouping: Grouping) -> VectorMatrix {
    match grouping {
        Grouping::InnerRight => *a * (*q * *a),
        Grouping::InnerLeft => (*a * *q) * *a,
    }
}

/// `(f, g) = Σ_i f̄_i ◇ g_i`.
pub fn algebra_scalar_product(f: &ModuleState, g: &ModuleState) -> Result<VectorMatrix> {
    check_pair(f, g)?;
    let mut acc = VectorMatrix::zero(f.kind);
    for (fi, gi) in f.components.iter().zip(&g.components) {
        acc = acc + diamond(&involute(fi), gi)?;
    }
    Ok(acc)
}

/// `(f, g)_R`, the `e_0` coefficient of `(f, g)`.
pub fn real_scalar_product(f: &ModuleState, g: &ModuleState) -> Result<f64> {
    algebra_scalar_product(f, g).map(|q| real_part(&q))
}

/// The full quarter sum `¼[q - Σ_{i=1..3} e_i ◇ q ◇ e_i]` for quaternion
/// states. Its vector part vanishes; its scalar is `(f, g)_R`.
pub fn real_projection(f: &ModuleState, g: &ModuleState) -> Result<VectorMatrix> {
    if f.kind != AlgebraKind::Quaternion {
        return Err(Error::UnsupportedKind {
            op: "real projection form",
            kind: f.kind,
        });
    }
    let q = algebra_scalar_product(f, g)?;
    let mut acc = q;
    for i in 1..4 {
        acc = acc - sandwich(&unit(f.kind, i), &q, Grouping::InnerRight);
    }
    Ok(acc.scale(0.25))
}

/// Scalar coefficient of [`real_projection`].
pub fn real_projection_form(f: &ModuleState, g: &ModuleState) -> Result<f64> {
    real_projection(f, g).map(|p| p.scalar())
}

/// `½[q - e_1 ◇ (q ◇ e_1)]` with `q = (f, g)`.
pub fn complex_scalar_product(f: &ModuleState, g: &ModuleState) -> Result<VectorMatrix> {
    complex_scalar_product_grouped(f, g, Grouping::InnerRight)
}

/// [`complex_scalar_product`] with an explicit grouping of the sandwich.
pub fn complex_scalar_product_grouped(
    f: &ModuleState,
    g: &ModuleState,
    grouping: Grouping,
) -> Result<VectorMatrix> {
    if f.kind == AlgebraKind::Real {
        return Err(Error::UnsupportedKind {
            op: "complex scalar product",
            kind: f.kind,
        });
    }
    let q = algebra_scalar_product(f, g)?;
    Ok((q - sandwich(&unit(f.kind, 1), &q, grouping)).scale(0.5))
}

/// A scalar product written as `weight · Σ_k row_k ◇ column_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    pub row: Vec<VectorMatrix>,
    pub column: Vec<VectorMatrix>,
    pub weight: f64,
}

impl Expansion {
    /// Row entries multiply from the left, summed for ascending `k`.
    pub fn evaluate(&self) -> VectorMatrix {
        let kind = self.row[0].kind();
        let sum = self
            .row
            .iter()
            .zip(&self.column)
            .fold(VectorMatrix::zero(kind), |acc, (r, c)| acc + *r * *c);
        sum.scale(self.weight)
    }
}

/// Row `(f̄_i, -e_1 f̄_i, ..., -e_m f̄_i)` for each component, `m = units`.
fn expansion_row(f: &ModuleState, units: usize) -> Vec<VectorMatrix> {
    f.components
        .iter()
        .flat_map(|fi| {
            let conj = involute(fi);
            (0..=units).map(move |u| {
                if u == 0 {
                    conj
                } else {
                    -(unit(f.kind, u) * conj)
                }
            })
        })
        .collect()
}

/// Column `(g_i, g_i e_1, ..., g_i e_m)` for each component.
fn expansion_column(g: &ModuleState, units: usize) -> Vec<VectorMatrix> {
    g.components
        .iter()
        .flat_map(|gi| (0..=units).map(move |u| if u == 0 { *gi } else { *gi * unit(g.kind, u) }))
        .collect()
}

/// The `4n`-long row `(f̄, -e_1 f̄, -e_2 f̄, -e_3 f̄)` per component.
pub fn real_expansion_row(f: &ModuleState) -> Result<Vec<VectorMatrix>> {
    require_quaternion(f.kind)?;
    Ok(expansion_row(f, 3))
}

/// The `4n`-long column `(g, g e_1, g e_2, g e_3)` per component.
pub fn real_expansion_column(g: &ModuleState) -> Result<Vec<VectorMatrix>> {
    require_quaternion(g.kind)?;
    Ok(expansion_column(g, 3))
}

fn require_quaternion(kind: AlgebraKind) -> Result<()> {
    if kind != AlgebraKind::Quaternion {
        return Err(Error::UnsupportedKind {
            op: "real multicomponent expansion",
            kind,
        });
    }
    Ok(())
}

fn require_h_or_o(kind: AlgebraKind) -> Result<()> {
    if !matches!(kind, AlgebraKind::Quaternion | AlgebraKind::Octonion) {
        return Err(Error::UnsupportedKind {
            op: "complex multicomponent expansion",
            kind,
        });
    }
    Ok(())
}

/// `¼ [f̄, -e_1 f̄, -e_2 f̄, -e_3 f̄] * [g; g e_1; g e_2; g e_3]`, which
/// evaluates to `(f, g)_R` with zero vector part.
pub fn multicomponent_expand_real(f: &ModuleState, g: &ModuleState) -> Result<Expansion> {
    check_pair(f, g)?;
    Ok(Expansion {
        row: real_expansion_row(f)?,
        column: real_expansion_column(g)?,
        weight: 0.25,
    })
}

/// `½ [f̄, -e_1 f̄] * [g; g e_1]`, which evaluates to the complex scalar
/// product. Quaternion and octonion states only.
pub fn multicomponent_expand_complex(f: &ModuleState, g: &ModuleState) -> Result<Expansion> {
    check_pair(f, g)?;
    require_h_or_o(f.kind)?;
    Ok(Expansion {
        row: expansion_row(f, 1),
        column: expansion_column(g, 1),
        weight: 0.5,
    })
}
