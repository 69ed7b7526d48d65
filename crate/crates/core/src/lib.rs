//! Exact truncated-series toolkit for affine sl2 and Virasoro characters.
//!
//! Series live in [`qseries`]; theta blocks in [`theta`]; level, weight and
//! index formulas in [`params`]; closed-form characters in [`characters`];
//! the brute-force basis oracle and label maps in [`pbw`]; fusion rings in
//! [`fusion`]; and the identity checks in [`verifier`].

pub mod characters;
pub mod fusion;
pub mod params;
pub mod pbw;
pub mod qseries;
pub mod rat;
pub mod theta;
pub mod verifier;

pub use qseries::{FracSeries, JacobiSeries, SeriesError, WDir};
pub use rat::Rat;
