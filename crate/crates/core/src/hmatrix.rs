//! Square matrices with entries in one Hurwitz algebra.
//!
//! The product is the ordinary row-by-column rule with each entry product
//! taken as a diamond product, `Z_ij = Σ_k X_ik ◇ Y_kj`. The sum over `k`
//! runs in ascending order so results are reproducible to the bit. No
//! reordering tricks are used: entries need not commute (H) or associate (O).

use std::fmt;
use std::ops::Add;

use rayon::prelude::*;

use crate::algebra::AlgebraKind;
use crate::error::{Error, ParseError, Result};
use crate::literal::{format_element, parse_at};
use crate::zorn::{diamond, embed, extract, involute, real_part, VectorMatrix};

#[derive(Debug, Clone, PartialEq)]
pub struct HMatrix {
    kind: AlgebraKind,
    n: usize,
    entries: Vec<VectorMatrix>,
}

impl HMatrix {
    /// Builds an `n×n` matrix from row-major entries.
    pub fn new(kind: AlgebraKind, n: usize, entries: Vec<VectorMatrix>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ShapeMismatch(
                "matrix dimension must be at least 1".into(),
            ));
        }
        if entries.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "{} entries do not form a {n}x{n} matrix",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.kind() != kind) {
            return Err(Error::KindMismatch {
                left: kind,
                right: e.kind(),
            });
        }
        Ok(Self { kind, n, entries })
    }

    pub fn from_fn(
        kind: AlgebraKind,
        n: usize,
        mut f: impl FnMut(usize, usize) -> VectorMatrix,
    ) -> Result<Self> {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self::new(kind, n, entries)
    }

    pub fn zeros(kind: AlgebraKind, n: usize) -> Result<Self> {
        Self::from_fn(kind, n, |_, _| VectorMatrix::zero(kind))
    }

    pub fn identity(kind: AlgebraKind, n: usize) -> Result<Self> {
        Self::from_fn(kind, n, |i, j| {
            if i == j {
                VectorMatrix::one(kind)
            } else {
                VectorMatrix::zero(kind)
            }
        })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &VectorMatrix {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[VectorMatrix] {
        &self.entries
    }

    /// Largest absolute coefficient over all entries.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, e| m.max(e.max_abs()))
    }

    /// Entrywise difference; panics on shape or kind mismatch.
    pub fn sub(&self, other: &HMatrix) -> HMatrix {
        assert_eq!((self.kind, self.n), (other.kind, other.n), "shape mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| *a - *b)
            .collect();
        HMatrix {
            kind: self.kind,
            n: self.n,
            entries,
        }
    }

    /// Parses `a, b; c, d`: rows separated by `;`, entries by `,`, each entry
    /// an element literal. The result must be square.
    pub fn parse(text: &str, kind: AlgebraKind) -> Result<Self, ParseError> {
        let mut rows: Vec<Vec<VectorMatrix>> = Vec::new();
        let mut offset = 0;
        for row_text in text.split(';') {
            let mut row = Vec::new();
            let mut col_offset = offset;
            for cell in row_text.split(',') {
                row.push(embed(&parse_at(cell, kind, col_offset)?));
                col_offset += cell.len() + 1;
            }
            rows.push(row);
            offset += row_text.len() + 1;
        }
        let n = rows.len();
        if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(ParseError::new(
                0,
                format!(
                    "matrix is not square: {n} rows but row {} has {} entries",
                    r + 1,
                    row.len()
                ),
            ));
        }
        let entries = rows.into_iter().flatten().collect();
        Ok(HMatrix { kind, n, entries })
    }
}

fn check_same_shape(a: &HMatrix, b: &HMatrix) -> Result<()> {
    if a.kind != b.kind {
        return Err(Error::KindMismatch {
            left: a.kind,
            right: b.kind,
        });
    }
    if a.n != b.n {
        return Err(Error::ShapeMismatch(format!(
            "{0}x{0} vs {1}x{1}",
            a.n, b.n
        )));
    }
    Ok(())
}

/// `Z_ij = Σ_k A_ik ◇ B_kj`, summed for ascending `k`. Rows are computed in
/// parallel; each entry's summation order is fixed.
pub fn matmul(a: &HMatrix, b: &HMatrix) -> Result<HMatrix> {
    check_same_shape(a, b)?;
    let n = a.n;
    let kind = a.kind;
    let entries: Vec<VectorMatrix> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            (0..n).fold(VectorMatrix::zero(kind), |acc, k| {
                acc + diamond(a.get(i, k), b.get(k, j)).expect("kinds checked")
            })
        })
        .collect();
    Ok(HMatrix { kind, n, entries })
}

/// `(A†)_ij = involute(A_ji)`.
pub fn conj_transpose(a: &HMatrix) -> HMatrix {
    let n = a.n;
    let entries = (0..n * n)
        .map(|idx| involute(a.get(idx % n, idx / n)))
        .collect();
    HMatrix {
        kind: a.kind,
        n,
        entries,
    }
}

/// `Σ_i real_part(A_ii)`.
pub fn matrix_real_trace(a: &HMatrix) -> f64 {
    (0..a.n).map(|i| real_part(a.get(i, i))).sum()
}

impl Add for &HMatrix {
    type Output = HMatrix;

    /// Entrywise sum; panics on shape or kind mismatch.
    fn add(self, rhs: &HMatrix) -> HMatrix {
        check_same_shape(self, rhs).expect("shape mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| *a + *b)
            .collect();
        HMatrix {
            kind: self.kind,
            n: self.n,
            entries,
        }
    }
}

impl fmt::Display for HMatrix {
    /// Same layout [`HMatrix::parse`] reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(&format_element(&extract(self.get(i, j))))?;
            }
        }
        Ok(())
    }
}
