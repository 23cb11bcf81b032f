//! Multiplication tables of the Hurwitz algebras.
//!
//! These tables are the ground truth of the crate. Every other
//! representation (in particular the vector-matrix product in [`crate::zorn`])
//! is checked against them, never the other way round.

use std::fmt;

use crate::algebra::AlgebraKind;
use crate::error::{Error, Result};

/// The product of two basis units: `e_i e_j = sign * e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

const fn p(index: usize) -> BasisProduct {
    BasisProduct { sign: 1, index }
}

const fn m(index: usize) -> BasisProduct {
    BasisProduct { sign: -1, index }
}

impl fmt::Display for BasisProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}e{}", self.index)
    }
}

static REAL: [[BasisProduct; 1]; 1] = [[p(0)]];

static COMPLEX: [[BasisProduct; 2]; 2] = [[p(0), p(1)], [p(1), m(0)]];

static QUATERNION: [[BasisProduct; 4]; 4] = [
    [p(0), p(1), p(2), p(3)],
    [p(1), m(0), p(3), m(2)],
    [p(2), m(3), m(0), p(1)],
    [p(3), p(2), m(1), m(0)],
];

static OCTONION: [[BasisProduct; 8]; 8] = [
    [p(0), p(1), p(2), p(3), p(4), p(5), p(6), p(7)],
    [p(1), m(0), p(3), m(2), p(7), m(6), p(5), m(4)],
    [p(2), m(3), m(0), p(1), p(6), p(7), m(4), m(5)],
    [p(3), p(2), m(1), m(0), m(5), p(4), p(7), m(6)],
    [p(4), m(7), m(6), p(5), m(0), m(3), p(2), p(1)],
    [p(5), p(6), m(7), m(4), p(3), m(0), m(1), p(2)],
    [p(6), m(5), p(4), m(7), m(2), p(1), m(0), p(3)],
    [p(7), p(4), p(5), p(6), m(1), m(2), m(3), m(0)],
];

static REAL_ROWS: [&[BasisProduct]; 1] = [&REAL[0]];
static COMPLEX_ROWS: [&[BasisProduct]; 2] = [&COMPLEX[0], &COMPLEX[1]];
static QUATERNION_ROWS: [&[BasisProduct]; 4] = [
    &QUATERNION[0],
    &QUATERNION[1],
    &QUATERNION[2],
    &QUATERNION[3],
];
static OCTONION_ROWS: [&[BasisProduct]; 8] = [
    &OCTONION[0],
    &OCTONION[1],
    &OCTONION[2],
    &OCTONION[3],
    &OCTONION[4],
    &OCTONION[5],
    &OCTONION[6],
    &OCTONION[7],
];

/// The signed multiplication table of one algebra.
#[derive(Debug, Clone, Copy)]
pub struct StructureConstants {
    kind: AlgebraKind,
    rows: &'static [&'static [BasisProduct]],
}

impl StructureConstants {
    pub fn of(kind: AlgebraKind) -> Self {
        let rows: &'static [&'static [BasisProduct]] = match kind {
            AlgebraKind::Real => &REAL_ROWS,
            AlgebraKind::Complex => &COMPLEX_ROWS,
            AlgebraKind::Quaternion => &QUATERNION_ROWS,
            AlgebraKind::Octonion => &OCTONION_ROWS,
        };
        Self { kind, rows }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Table entry for `e_i e_j`. Both indices must be below `kind.dim()`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> BasisProduct {
        self.rows[i][j]
    }

    /// Iterates `(i, j, product)` over the whole table in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, BasisProduct)> + '_ {
        let d = self.kind.dim();
        (0..d).flat_map(move |i| (0..d).map(move |j| (i, j, self.get(i, j))))
    }
}

/// Looks up `e_i e_j` in the table of `kind`.
pub fn basis_product(kind: AlgebraKind, i: usize, j: usize) -> Result<BasisProduct> {
    for index in [i, j] {
        if index >= kind.dim() {
            return Err(Error::IndexOutOfRange { index, kind });
        }
    }
    Ok(StructureConstants::of(kind).get(i, j))
}
