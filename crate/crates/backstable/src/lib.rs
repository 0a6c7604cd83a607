//! Exact combinatorics of products of (double) Schubert and Grothendieck
//! polynomials over small symmetric groups.
//!
//! The crate computes, in exact rational arithmetic:
//!
//! * structure constants for all four product families (Schubert /
//!   Grothendieck, single / double), forward and back-stable;
//! * the stability numbers `FS`/`BS` of those products together with the
//!   closed-form bounds `Xi` and `Omega` built from Lehmer-code statistics;
//! * the integer support of a product and its closed-form description,
//!   with dominant and Grassmannian specializations;
//! * binary staircase tableaux and the nonzeroness test for the
//!   Schubert-basis coefficients of a Grothendieck polynomial;
//! * the Cauchy-identity expansion coefficients `A`/`B`, the convention
//!   calibration they force, and the resulting coefficient formulas.
//!
//! Entry points live in [`schubert`] (polynomial construction and
//! expansion), [`stability`], [`lenart`] and [`cauchy`]; the supporting
//! arithmetic is in [`perm`] and [`ring`]. Runnable walkthroughs are under
//! `examples/`, and the `backstable` binary exposes the same operations as
//! subcommands (`poly`, `constants`, `expand`, `stability`, `support`,
//! `tableaux`, `cauchy`, `verify`).

pub mod cache;
pub mod cauchy;
pub mod cli;
pub mod error;
pub mod lenart;
pub mod perm;
pub mod report;
pub mod ring;
pub mod schubert;
pub mod stability;
pub mod suites;
mod util;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
