//! Exact coding theory over finite fields: two families of linear codes
//! built from modified Vandermonde generator matrices, with closed-form MDS
//! criteria, explicit parity checks, Schur-square GRS tests and
//! self-orthogonality constructions — all cross-checkable against
//! brute-force oracles.
//!
//! The layers, bottom up:
//!
//! - [`gf`]: arithmetic in GF(p^m), square roots, element notation.
//! - [`matgf`]: exact dense linear algebra (determinant, rank, null space).
//! - [`symfun`]: elementary/complete symmetric polynomials, dual weights,
//!   generalized Vandermonde determinants, Schur polynomials.
//! - [`codes`]: generic linear codes, minors oracle, minimum distance,
//!   Schur squares, duality.
//! - [`family1`]: codes from Vandermonde generators with the rows x^(k-2),
//!   x^(k-1) replaced by x^k, x^(k+1) (and the generalized deleted-pair
//!   version).
//! - [`family2`]: codes whose generator keeps rows x^0..x^(k-2) and one high
//!   row x^h.
//! - [`construct`]: explicit evaluation-set constructions and the worked
//!   instance catalog.
//! - [`cli`]: the `mdsforge` command-line front end.

pub mod cli;
pub mod codes;
pub mod comb;
pub mod construct;
pub mod error;
pub mod family1;
pub mod family2;
pub mod gf;
pub mod matgf;
pub mod symfun;

pub use error::{Error, Result};

/// The guide's chapters compiled as doctests, so `book/` cannot drift from
/// the library (`cargo test --doc` runs every snippet).
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    pub struct Intro;
    #[doc = include_str!("../../../book/src/fields.md")]
    pub struct Fields;
    #[doc = include_str!("../../../book/src/matrices.md")]
    pub struct Matrices;
    #[doc = include_str!("../../../book/src/symmetric.md")]
    pub struct Symmetric;
    #[doc = include_str!("../../../book/src/codes.md")]
    pub struct Codes;
    #[doc = include_str!("../../../book/src/family-one.md")]
    pub struct FamilyOne;
    #[doc = include_str!("../../../book/src/family-two.md")]
    pub struct FamilyTwo;
    #[doc = include_str!("../../../book/src/constructions.md")]
    pub struct Constructions;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct CliChapter;
}
