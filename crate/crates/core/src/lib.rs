//! Characteristic polynomials of path and cycle graphs, the shifted equations
//! `f_n(λ) = c`, and the machinery used to study where their roots land.
//!
//! The crate is organised bottom-up:
//!
//! - [`seq`]: exact Fibonacci, Pell and binomial values.
//! - [`poly`]: exact integer polynomials, path/cycle characteristic
//!   polynomials, Chebyshev families and Gaussian-rational evaluation.
//! - [`roots`]: adaptive-precision Aberth–Ehrlich solving and exact Sturm
//!   counting of real roots.
//! - [`fit`]: axis-aligned ellipse fitting by linear least squares.
//! - [`verify`]: identity, theorem and conjecture checks producing
//!   [`verify::VerificationReport`]s.
//! - [`cli`]: the `pathspec` command-line front end.

pub mod cli;
pub mod error;
pub mod fit;
pub mod poly;
pub mod roots;
pub mod seq;
pub mod verify;

pub use error::{Error, Result};
