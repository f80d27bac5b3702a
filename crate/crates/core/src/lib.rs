//! Exact construction and analysis of semiassociative algebras over finite
//! fields and `F_p(v)`: nonassociative cyclic and generalized cyclic
//! algebras, Menichetti algebras, skew matrix algebras and differential
//! extensions, with nuclei, division tests, splitting certificates and
//! verification suites.
//!
//! ```
//! use semiassoc::recipe::{Built, Recipe};
//!
//! let Built::Prime(c) = Recipe::parse("cyclic:F4/F2:d=w").unwrap().build().unwrap() else {
//!     unreachable!()
//! };
//! assert_eq!(c.algebra.dim(), 4);
//! assert_eq!(c.algebra.nucleus_right().dim(), 2);
//! ```

pub mod construct;
pub mod differential;
pub mod error;
pub mod etale;
pub mod exactfield;
pub mod exactla;
pub mod nalg;
pub mod recipe;
pub mod skewpoly;
pub mod suites;

pub use error::{Error, Result};

/// Algebras over a prime field.
pub type Algebra = nalg::AlgebraSC<exactfield::PrimeField>;
/// Algebras over `F_{p^k}`.
pub type ExtAlgebra = nalg::AlgebraSC<exactfield::GaloisField>;
/// Algebras over `F_p(w)`.
pub type RatAlgebra = nalg::AlgebraSC<exactfield::RatFunField>;
pub type MatrixFp = exactla::Matrix<exactfield::PrimeField>;
