//! Exact computation of Hankel determinant sequences for generating functions
//! of Dyck paths with residue-restricted peak heights.
//!
//! The library is organized in two layers:
//!
//! * scalar-generic exact kernels — dense polynomials, normalized rational
//!   functions, truncated power series, quadratic functional equations and a
//!   fraction-free determinant ([`exact`], [`hankel::bareiss_det`]) — generic
//!   over any [`coeff::Coeff`] scalar;
//! * the combinatorial layer — path enumeration ([`paths`]), generating
//!   functions built by several independent routes ([`genfun`]), the quadratic
//!   Hankel-reduction chain ([`tau`]) and the end-to-end verification harness
//!   ([`verify`]) — instantiated over arbitrary-precision rationals.
//!
//! The concrete rational instantiations used throughout the crate are exported
//! as type aliases at the crate root ([`Rat`], [`QPoly`], [`QRatFun`],
//! [`QSeries`], [`QQuadEq`]).
//!
//! ```
//! use dyck_hankel::{genfun, hankel};
//!
//! // Paths whose peak heights are multiples of 3, and the periodic word
//! // formed by the Hankel determinants of their counting sequence.
//! let f = genfun::residue_gf(3, 3, 20).unwrap();
//! let h = hankel::hankel_sequence(&f, 0, 8).unwrap();
//! let rendered: Vec<String> = h.iter().map(|v| v.to_string()).collect();
//! assert_eq!(rendered.join(","), "1,0,-1,-1,-1,0,1,1");
//! ```

pub mod coeff;
pub mod exact;
pub mod genfun;
pub mod hankel;
pub mod paths;
pub mod tau;
pub mod verify;

pub use coeff::Coeff;
pub use exact::ExactError;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational, the coefficient field used everywhere.
pub type Rat = num_rational::BigRational;

/// Dense univariate polynomial over the rationals.
pub type QPoly = exact::Poly<Rat>;
/// Normalized quotient of two rational polynomials.
pub type QRatFun = exact::RatFun<Rat>;
/// Power series over the rationals, truncated at a stated order.
pub type QSeries = exact::Series<Rat>;
/// Canonical quadratic functional equation over the rationals.
pub type QQuadEq = exact::QuadEq<Rat>;

/// Shorthand for building a `Rat` from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}
