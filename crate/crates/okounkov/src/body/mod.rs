//! Graded semigroups of valuation vectors, the structural conditions that
//! make their cones well behaved, truncated and exact Okounkov bodies with
//! certified volume data, homogeneity, and the restricted theory along
//! coordinate flats.

mod approx;
mod restricted;
mod semigroup;

pub use approx::{
    adelic_volume_estimate, eventual_nonvanishing, homogeneity_check, okounkov_truncated,
    scaled_volume, volume_gaps_decay, EventualNonvanishing, HomogeneityReport, OkounkovApprox,
    VolumeEstimate, VolumeRow,
};
pub use restricted::{restricted_series, restricted_volume_estimate};
pub use semigroup::{check_conditions, semigroup_slice, ConditionsReport, GradedSemigroup};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BodyError {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
    #[error(transparent)]
    Adelic(#[from] crate::adelic::AdelicError),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeomError),
}
