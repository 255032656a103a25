//! Two-parameter global semigroups and cones for a pair of adelic divisors,
//! fiber slicing against directly computed bodies, and the convergence,
//! continuity, log-concavity and inner-approximation experiment suites.

mod build;
mod experiments;
mod fibers;

pub use build::{build_global, restricted_global, GlobalCone, GlobalSemigroup};
pub use experiments::{
    continuity_experiment, fujita_inner_body, log_concavity_check, model_convergence,
    ContinuityRow, ContinuityTable, ConvergenceRow, ConvergenceTable, FujitaWitness,
    LogConcavityRow,
};
pub use fibers::{fiber_check, interior_contains, FiberReport, FiberStatus};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GlobalError {
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("bad experiment input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Body(#[from] crate::body::BodyError),
    #[error(transparent)]
    Adelic(#[from] crate::adelic::AdelicError),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeomError),
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
}
