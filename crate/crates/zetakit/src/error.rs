//! Error type shared by every evaluation path in the crate.

use thiserror::Error;

/// All failure modes of the numerical routines.
///
/// Every variant carries a human-readable description of the violated
/// condition so the CLI can surface it verbatim.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Evaluation at a pole of the target function.
    #[error("pole: {0}")]
    Pole(String),

    /// Input outside the validity region of the chosen representation.
    #[error("domain: {0}")]
    Domain(String),

    /// The requested evaluation would be dominated by floating-point
    /// cancellation; the message names the stable alternative.
    #[error("cancellation risk: {0}")]
    Cancellation(String),

    /// An iteration failed to meet its tolerance within the level budget.
    #[error("no convergence after {count} {unit}")]
    NoConvergence { count: usize, unit: &'static str },

    /// Truncated-series degree or polynomial degree above the supported cap.
    #[error("degree cap exceeded: {got} > {max}")]
    DegreeCap { max: usize, got: usize },

    /// A denominator on the evaluation path vanished (or nearly so).
    #[error("near-zero denominator: {0}")]
    NearZeroDenominator(String),

    /// Result magnitude outside binary64 range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Input outside the validated range of an oracle-grade routine.
    #[error("out of validated range: {0}")]
    Range(String),

    /// File write/read failure in export paths.
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
