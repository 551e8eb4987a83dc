//! Exact arithmetic for quadratic-irrational torus parameters.
//!
//! * [`exact`]: integers, rationals, canonical quadratic surds, polynomials.
//! * [`cf`]: periodic continued fractions, matrix words, fixed quadratics.
//! * [`bej`]: integer points of the period variety over its Pell conic.
//! * [`surface`]: Legendre surfaces, sections, Picard numbers, CM table.
//! * [`cli`] and [`verify`]: the command-line front end and its self-checks.

pub mod bej;
pub mod cf;
pub mod cli;
pub mod error;
pub mod exact;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
