//! Exact coefficient arithmetic: dense polynomials, normalized rational
//! functions, truncated power series and canonical quadratic equations.

mod poly;
mod quad;
mod ratfun;
mod series;

pub use poly::Poly;
pub use quad::{canonicalize_linear_fractional, moebius_solve, solve_quadratic, QuadEq};
pub use ratfun::{geom_sum, RatFun};
pub use series::Series;

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("series expansion requested for a function with a pole at the origin")]
    PoleAtOrigin,
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("reciprocal of a series with zero constant term")]
    ZeroConstantTerm,
    #[error("invalid quadratic equation: {0}")]
    InvalidEquation(String),
    #[error("canonicalization failed: {0}")]
    Canonicalization(String),
}
