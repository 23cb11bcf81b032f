//! The classical 2×2 complex-matrix picture of the quaternions, kept as a
//! comparison target for the vector matrices.

use std::ops::Mul;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::AlgebraKind;
use crate::element::Element;
use crate::error::{Error, Result};

/// A 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex2x2(pub [[Complex64; 2]; 2]);

impl Complex2x2 {
    pub fn identity() -> Self {
        let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        Self([[o, z], [z, o]])
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Largest absolute difference over all real and imaginary parts.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let d = self.0[i][j] - other.0[i][j];
                worst = worst.max(d.re.abs()).max(d.im.abs());
            }
        }
        worst
    }
}

impl Mul for Complex2x2 {
    type Output = Complex2x2;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        let cell = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Self([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }
}

/// `q ↦ [[q0 - i q3, -i q1 - q2], [-i q1 + q2, q0 + i q3]]`.
///
/// This is a homomorphism: `M(pq) = M(p) M(q)` with `pq` the table product.
pub fn cayley_dickson_matrix(q: &Element) -> Result<Complex2x2> {
    if q.kind() != AlgebraKind::Quaternion {
        return Err(Error::UnsupportedKind {
            op: "complex 2x2 realization",
            kind: q.kind(),
        });
    }
    let c = q.coeffs();
    let (q0, q1, q2, q3) = (c[0], c[1], c[2], c[3]);
    Ok(Complex2x2([
        [Complex64::new(q0, -q3), Complex64::new(-q2, -q1)],
        [Complex64::new(q2, -q1), Complex64::new(q0, q3)],
    ]))
}

/// `(x, y, z, ct) ↦ [[ct + z, x - i y], [x + i y, ct - z]]`, whose determinant
/// is the Minkowski form `(ct)² - x² - y² - z²`. `ct` is taken as a single
/// coordinate.
pub fn spacetime_map(x: f64, y: f64, z: f64, ct: f64) -> Complex2x2 {
    Complex2x2([
        [Complex64::new(ct + z, 0.0), Complex64::new(x, -y)],
        [Complex64::new(x, y), Complex64::new(ct - z, 0.0)],
    ])
}
