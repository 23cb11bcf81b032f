use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// One of the four Hurwitz algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 4] = [
        AlgebraKind::Real,
        AlgebraKind::Complex,
        AlgebraKind::Quaternion,
        AlgebraKind::Octonion,
    ];

    /// Number of real basis units `e_0 .. e_{dim-1}`.
    pub const fn dim(self) -> usize {
        match self {
            AlgebraKind::Real => 1,
            AlgebraKind::Complex => 2,
            AlgebraKind::Quaternion => 4,
            AlgebraKind::Octonion => 8,
        }
    }

    /// Length of the vector (imaginary) part.
    pub const fn vec_len(self) -> usize {
        self.dim() - 1
    }

    pub const fn name(self) -> &'static str {
        match self {
            AlgebraKind::Real => "real",
            AlgebraKind::Complex => "complex",
            AlgebraKind::Quaternion => "quaternion",
            AlgebraKind::Octonion => "octonion",
        }
    }

    /// Single-letter name used on the command line.
    pub const fn short_name(self) -> char {
        match self {
            AlgebraKind::Real => 'r',
            AlgebraKind::Complex => 'c',
            AlgebraKind::Quaternion => 'h',
            AlgebraKind::Octonion => 'o',
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "r" | "real" => Ok(AlgebraKind::Real),
            "c" | "complex" => Ok(AlgebraKind::Complex),
            "h" | "q" | "quaternion" => Ok(AlgebraKind::Quaternion),
            "o" | "octonion" => Ok(AlgebraKind::Octonion),
            other => Err(format!("unknown algebra `{other}` (expected r, c, h or o)")),
        }
    }
}
