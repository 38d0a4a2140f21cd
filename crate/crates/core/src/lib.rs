//! Split/division classification of quaternion algebras.
//!
//! A quaternion algebra `H_K(a, b)` over a field `K` is either split
//! (isomorphic to 2×2 matrices) or a division algebra. This crate decides
//! which, for `K = ℚ`, `K = ℚ(√d)`, and odd-degree extensions of quadratic
//! fields (dihedral, unramified abelian ℓ-extensions, `ℚ(ζ₃)(∛α)`).
//!
//! ```
//! use qalg::quadfield::QuadraticField;
//! use qalg::quatalg::{classify_quadratic, QuaternionAlgebraQ, classify_quadratic_engine};
//!
//! let f = QuadraticField::new(3).unwrap();
//! let closed = classify_quadratic(&f, 13, 7).unwrap();
//! let engine = classify_quadratic_engine(&f, &QuaternionAlgebraQ::new(13, 7).unwrap()).unwrap();
//! assert!(closed.is_division());
//! assert_eq!(closed.result, engine.result);
//! ```
//!
//! The modules build on each other: [`arith`] supplies exact 64-bit number
//! theory, [`localsym`] the Hilbert symbols at every place of ℚ (with a
//! search-based oracle), [`quadfield`] the decomposition of places in
//! quadratic fields, [`quatalg`] the classifiers, and [`cli`] the command
//! line. The guide in `book/` walks through each of them.

pub mod arith;
pub mod cli;
pub mod error;
pub mod localsym;
pub mod quadfield;
pub mod quatalg;

pub use error::{Error, Result};

// Compile and run every snippet of the guide as part of `cargo test --doc`.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    pub struct Arithmetic;
    #[doc = include_str!("../../../book/src/hilbert-symbols.md")]
    pub struct HilbertSymbols;
    #[doc = include_str!("../../../book/src/local-oracle.md")]
    pub struct LocalOracle;
    #[doc = include_str!("../../../book/src/quadratic-fields.md")]
    pub struct QuadraticFields;
    #[doc = include_str!("../../../book/src/classification.md")]
    pub struct Classification;
    #[doc = include_str!("../../../book/src/extensions.md")]
    pub struct Extensions;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct CommandLine;
}
