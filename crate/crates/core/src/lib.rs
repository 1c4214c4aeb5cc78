//! Exact classification of finite-rank left-invariant algebraic D-modules on
//! complex reductive groups.
//!
//! The crate is organised by the kind of group it handles:
//!
//! * [`rootdata`]: Cartan types, Smith normal form and the center `Z(G^sc)`,
//!   semisimple groups `G^sc / Γ`.
//! * [`finab`]: characters of `Γ` and representation classes as character
//!   multisets, which classify invariant D-modules on semisimple groups.
//! * [`torusconn`]: constant connections on tori, their monodromy classes and
//!   gauge checks over Laurent polynomials.
//! * [`glred`]: the `GL_r` case, reduced to `G_m` through the determinant.
//! * [`reductive`]: products `G_m^l × G^sc/Γ` and the derived monodromy
//!   invariant.
//! * [`cohomo`]: Weyl degrees, Poincaré polynomials and Betti numbers.
//! * [`lieverify`]: symbolic checks of the underlying differential identities.
//! * [`json`]: the wire formats used by the command-line tool.

#![allow(clippy::needless_range_loop)]

pub mod cohomo;
pub mod finab;
pub mod glred;
pub mod json;
pub mod lieverify;
pub mod limits;
pub mod matrix;
pub mod poly;
pub mod reductive;
pub mod rootdata;
pub mod torusconn;

/// Exact rationals used throughout.
pub type Rational = num::BigRational;

pub use matrix::RationalMatrix;
