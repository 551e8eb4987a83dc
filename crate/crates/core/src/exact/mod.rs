//! Exact integer, rational, quadratic-surd and polynomial arithmetic.
//!
//! Integers and rationals are GMP-backed [`rug`] values; every comparison in
//! the crate goes through integer arithmetic, never floating point.

mod poly;
pub(crate) mod squarefree;
mod surd;

pub use poly::{parse_rational, rational_text, IntPolynomial};
pub use rug::{Integer, Rational};
pub use surd::QuadraticSurd;

pub(crate) use surd::parse_integer;
