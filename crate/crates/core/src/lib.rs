//! Angle-spread geometry of the probability simplex.
//!
//! For a distribution `p` other than the uniform point `u`, the simplex
//! contains a unique longest chord `[a, b]` through both `u` and `p`. The
//! angle between the position vectors `a` and `b` is the *angle spread* of
//! `p`. This crate computes that chord and its spread, evaluates the
//! closed-form minimum `arccos((n-2)/(n+2))` together with witnesses that
//! attain it, verifies the closed form by brute force, and constructs
//! half-angle target distributions on the chord for experiment design.
//!
//! Modules:
//! - [`simplex`]: validated simplex points and angle utilities
//! - [`spread`]: maximal chords, spread cosine/angle, the closed-form bound
//! - [`reduction`]: the averaging inequality and the scalar reduction `Q(y)`
//! - [`oracle`]: lattice and random-sampling maximizers, independent of the closed form
//! - [`targets`]: half-angle target pairs `(q, v)` on the chord of `p`
//! - [`cli`]: the `anglespread` command-line front end

pub mod cli;
pub mod oracle;
pub mod output;
pub mod reduction;
pub mod simplex;
pub mod spread;
pub mod targets;

pub use simplex::{SimplexContext, SimplexPoint};

/// Errors shared across the crate.
///
/// The CLI maps these onto exit codes: [`Error::TooLarge`] exits 4, every
/// other variant exits 3.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("input vector is empty")]
    EmptyInput,
    #[error("coordinate {index} is not finite")]
    NonFinite { index: usize },
    #[error("coordinate {index} is {value:e}, below the negativity tolerance")]
    NegativeCoordinate { index: usize, value: f64 },
    #[error("coordinates sum to {sum}, which is not 1 within tolerance")]
    BadSum { sum: f64 },
    #[error("dimension {n} is not supported here (need n >= {min})")]
    BadDimension { n: usize, min: usize },
    #[error("vectors have mismatched dimensions {left} and {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vector has zero norm")]
    ZeroVector,
    #[error("point is within {eps:e} of the uniform distribution")]
    UniformInput { eps: f64 },
    #[error("reduced profile is invalid: {reason}")]
    InvalidProfile { reason: &'static str },
    #[error("denominator radicand {value:e} is not positive")]
    DegenerateDenominator { value: f64 },
    #[error("constant middle value {zeta} falls outside [{x}, {y}]")]
    InfeasiblePair { zeta: f64, x: f64, y: f64 },
    #[error("{what} = {value} lies outside [{lo}, {hi}]")]
    OutOfDomain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("enumeration size {size} exceeds the guard of {limit} points")]
    TooLarge { size: u128, limit: u128 },
    #[error("bisection failed to bracket the target angle to {tol:e} within {iters} iterations")]
    ToleranceNotMet { tol: f64, iters: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
