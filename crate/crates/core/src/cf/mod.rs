//! Periodic continued fractions and their unimodular matrix words.

mod matrix;
mod periodic;

pub use matrix::{pell_check, QuadCoeffs, UnimodularMatrix};
pub use periodic::{equivalent, PeriodicCF};

pub(crate) use matrix::attracting_fixed_point;
