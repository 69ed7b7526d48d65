//! Closed-form characters, two-variable where a Jacobi form exists and
//! pre-substituted (generator-level (w, q) -> (q^{-+1/2}, q^3)) for identity checks.

mod affine;
mod special;
mod virasoro;

pub use affine::{
    affine_denominator_inverse, ch_admissible, ch_admissible_sub, ch_affine_verma, ch_boundary_affine,
    ch_boundary_affine_sub, ch_weyl, ch_weyl_sub, substitute_at, substitute_to, Trunc,
};
pub use special::{
    ch_a3p_sum, ch_a6_closed, ch_fermion, ch_fermion_half, ch_v2_closed, ch_vp_sum, fermion_product, required_r_max,
};
pub use virasoro::{ch_boundary_vir, ch_log, ch_minimal, ch_vir_verma, partition_series};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::params::ParamError;
use crate::qseries::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("r_max = {given} too small for this cutoff; need at least {required}")]
    RMaxTooSmall { given: i64, required: i64 },
    #[error("supercharacter not defined here: {0}")]
    InvalidVariant(String),
    #[error("could not reach q-cutoff {0} after widening the window")]
    WindowTooSmall(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Char,
    Superchar,
}

impl Variant {
    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "char" => Some(Variant::Char),
            "superchar" | "schar" => Some(Variant::Superchar),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Char => "char",
            Variant::Superchar => "superchar",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    AffVermaHw,
    AffVermaLw,
    Weyl,
    AffAdmHw,
    AffAdmLw,
    AffBoundary,
    VirVerma,
    VirMinimal,
    VirLog,
    VirBoundary,
    FermHalf,
    FermThreehalf,
    VpSum,
    A3pSum,
    V2Closed,
    A6Closed,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::AffVermaHw,
        Family::AffVermaLw,
        Family::Weyl,
        Family::AffAdmHw,
        Family::AffAdmLw,
        Family::AffBoundary,
        Family::VirVerma,
        Family::VirMinimal,
        Family::VirLog,
        Family::VirBoundary,
        Family::FermHalf,
        Family::FermThreehalf,
        Family::VpSum,
        Family::A3pSum,
        Family::V2Closed,
        Family::A6Closed,
    ];

    /// Kebab-case CLI name, e.g. `vir-minimal`.
    pub fn cli_name(self) -> &'static str {
        match self {
            Family::AffVermaHw => "aff-verma-hw",
            Family::AffVermaLw => "aff-verma-lw",
            Family::Weyl => "weyl",
            Family::AffAdmHw => "aff-adm-hw",
            Family::AffAdmLw => "aff-adm-lw",
            Family::AffBoundary => "aff-boundary",
            Family::VirVerma => "vir-verma",
            Family::VirMinimal => "vir-minimal",
            Family::VirLog => "vir-log",
            Family::VirBoundary => "vir-boundary",
            Family::FermHalf => "ferm-half",
            Family::FermThreehalf => "ferm-threehalf",
            Family::VpSum => "vp-sum",
            Family::A3pSum => "a3p-sum",
            Family::V2Closed => "v2-closed",
            Family::A6Closed => "a6-closed",
        }
    }

    pub fn from_cli_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.cli_name() == s)
    }

    /// Whether the family has a Jacobi (two-variable) form.
    pub fn has_jacobi_form(self) -> bool {
        matches!(
            self,
            Family::AffVermaHw
                | Family::AffVermaLw
                | Family::Weyl
                | Family::AffAdmHw
                | Family::AffAdmLw
                | Family::AffBoundary
                | Family::FermHalf
                | Family::FermThreehalf
        )
    }
}

/// A module family plus the parameters that are meaningful for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleLabel {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    /// Generic weight mu (affine) or h (Virasoro Verma) as "num/den".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    pub variant: Variant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_max: Option<i64>,
}

impl ModuleLabel {
    pub fn new(family: Family) -> Self {
        ModuleLabel { family, q: None, p: None, r: None, s: None, weight: None, variant: Variant::Char, r_max: None }
    }
}
