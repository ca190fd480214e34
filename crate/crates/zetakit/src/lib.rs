//! zetakit: Riemann zeta across the complex plane through rapidly converging
//! incomplete-gamma series, plus the supporting special-function stack —
//! generalized Laguerre polynomials (stable recursions and asymptotics),
//! Kummer confluent hypergeometric functions (power series and Laguerre
//! expansions), incomplete gamma by Gauss continued fraction with Laguerre
//! closed forms, and polynomial approximants whose roots shadow the zeta
//! zeros.
//!
//! All arithmetic is binary64 (`num_complex::Complex64`); extended precision
//! is out of scope. Every truncated series reports its term count and an
//! a-posteriori tail estimate through [`kummer::SeriesResult`].

pub mod approx;
pub mod cli;
pub mod error;
pub mod incgamma;
pub mod kummer;
pub mod laguerre;
pub mod numeric;
pub mod poly;
pub mod selftest;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Default relative tolerance for iterative evaluations, overridable per call
/// and through the `ZETAKIT_TOL` environment variable in the CLI.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Default truncation level of the zeta lattice sums: e^{-49 pi} already
/// underflows binary64, so larger K buys nothing.
pub const DEFAULT_K: u32 = 6;
