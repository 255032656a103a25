//! Toric encoding of adelic divisors: a fixed complete fan carries every
//! model, divisors are ray-coefficient vectors, the boundary norm is a
//! weighted sup-distance on boundary coefficients, and Cauchy sequences with
//! explicit rational limits give the section spaces of the completion.

mod adelic_divisor;
mod base_plus;
mod divisor;
mod frame;
mod sections;

pub use adelic_divisor::{
    boundary_distance, verify_cauchy, CauchyReport, CauchyViolation, NormValue, StageSeq,
    ToricAdelicDivisor,
};
pub use base_plus::{augmented_base_locus, BasePlusReport};
pub use divisor::{BoundaryDivisor, ModelDivisor};
pub use frame::ToricFrame;
pub use sections::{adelic_sections, limit_series, model_series, sandwich_spaces, SandwichTriple};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdelicError {
    #[error("invalid toric frame: {0}")]
    BadFrame(String),
    #[error("invalid divisor data: {0}")]
    BadDivisor(String),
    #[error("divisors live on different frames")]
    FrameMismatch,
    #[error("stage {0} is not materialized for this divisor")]
    StageUnavailable(usize),
    #[error("Cauchy condition fails: {0}")]
    CauchyViolation(String),
    #[error("reference divisor is not ample on the frame: {0}")]
    NonAmple(String),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeomError),
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
}
