//! The four Hurwitz algebras R, C, H and O, built twice.
//!
//! * As coefficient vectors multiplied straight from their multiplication
//!   tables ([`tables`], [`element`]). This is the reference.
//! * As 2×2 vector matrices `(x_0, x⃗)` multiplied with a dot/cross rule
//!   ([`zorn`]). This is the representation everything else is built on.
//!
//! On top of the vector matrices sit square matrices with algebra entries
//! ([`hmatrix`]), finite Hilbert modules with real and complex scalar
//! products ([`hilbert`]), and a seeded verifier for the algebraic laws
//! ([`identities`]). [`representations`] holds the classical complex 2×2
//! picture of the quaternions for comparison.
//!
//! ```
//! use hurwitz::{parse_element, AlgebraKind, VectorMatrix};
//!
//! let x: VectorMatrix = parse_element("e1", AlgebraKind::Quaternion)?.into();
//! let y: VectorMatrix = parse_element("e2", AlgebraKind::Quaternion)?.into();
//! assert_eq!((x * y).to_string(), "e3");
//! # Ok::<(), hurwitz::Error>(())
//! ```
//!
//! A longer guide lives in the `book/` directory of the repository.

pub mod algebra;
pub mod element;
pub mod error;
pub mod hilbert;
pub mod hmatrix;
pub mod identities;
pub mod literal;
pub mod representations;
pub mod tables;
pub mod zorn;

pub use algebra::AlgebraKind;
pub use element::{conjugate, oracle_multiply, Element};
pub use error::{Error, ParseError, Result};
pub use hilbert::ModuleState;
pub use hmatrix::HMatrix;
pub use identities::{run_all, run_suite, IdentityReport, Suite};
pub use literal::{format_element, parse_element};
pub use tables::{basis_product, BasisProduct, StructureConstants};
pub use zorn::{diamond, embed, extract, DotValue, VectorMatrix};

// Compile and run every snippet of the README and the guide as a doctest.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/vector-matrices.md")]
    mod vector_matrices {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/hilbert-modules.md")]
    mod hilbert_modules {}
    #[doc = include_str!("../../../book/src/complex-matrices.md")]
    mod complex_matrices {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
