//! Exact truncated series in q and in (w, q).

mod frac;
mod jacobi;
mod json;
mod poch;

pub use frac::{FracSeries, Mismatch};
pub use jacobi::{JMismatch, JacobiSeries, WBound, WDir};
pub use json::{series_from_json, series_to_json, SeriesJson};
pub use poch::{js_geom, poch, poch_expand, poch_inverse_w, poch_w, poch_w_scaled, Expansion, Window};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has no terms below its cutoff")]
    ZeroLeadingTerm,
    #[error("infinitely many factors contribute below the cutoff")]
    NonTerminating,
    #[error("unsafe substitution: {0}")]
    UnsafeSubstitution(String),
    #[error("incompatible w-windows: {0}")]
    WindowMismatch(String),
    #[error("malformed series JSON: {0}")]
    Json(String),
}

pub fn fs_add(a: &FracSeries, b: &FracSeries) -> FracSeries {
    a.add(b)
}

pub fn fs_mul(a: &FracSeries, b: &FracSeries) -> FracSeries {
    a.mul(b)
}

pub fn fs_inverse(a: &FracSeries) -> Result<FracSeries, SeriesError> {
    a.inverse()
}

pub fn js_substitute(a: &JacobiSeries, w_exp: &crate::Rat, q_exp: &crate::Rat) -> Result<FracSeries, SeriesError> {
    a.substitute(w_exp, q_exp)
}
