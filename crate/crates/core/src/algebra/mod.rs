//! Exact scalar arithmetic and the combinatorics of ordered partitions.
//!
//! Everything downstream is built on three carriers: [`Rational`]
//! (arbitrary precision, always reduced), [`CPoly`] (polynomials in the
//! formal central charge `c`) and [`MPoly`] (sparse multivariate
//! polynomials over any [`Ring`]).

mod coeffs;
mod compositions;
mod cpoly;
mod mpoly;
mod point_rational;
mod rational;

pub use coeffs::{c_coeff, c_coeff_alt, CoeffTable, DEFAULT_WEIGHT_CAP};
pub use compositions::{enumerate_compositions, Composition};
pub use cpoly::CPoly;
pub(crate) use cpoly::rational_to_f64;
pub use mpoly::{FieldOps, MPoly, Ring};
pub use point_rational::{poly_to_string, PointRational};
pub use rational::{binomial, factorial, falling_factorial, int, rat, parse_rational, Rational};
