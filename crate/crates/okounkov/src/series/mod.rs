//! Flags, lexicographic valuations of Laurent sections, graded linear
//! series with exact echelonization, base loci of monomial series, and
//! restriction to coordinate subvarieties.

mod base_locus;
mod flag;
mod graded;
mod section;
mod space;

pub use base_locus::{base_locus, stable_base_locus, CoordinateFlatSet, FlatAmbient, Stabilization};
pub use flag::{lex_compare, Flag};
pub use graded::{GradedSeries, SeriesKind, SeriesSource};
pub use section::LaurentSection;
pub use space::SectionSpace;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exponent vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("valuation of zero undefined")]
    ZeroSection,
    #[error("negative exponent outside the chart convention")]
    NegativeExponent,
    #[error("base locus supported only for monomial series")]
    NonMonomial,
    #[error("invalid flag: {0}")]
    BadFlag(String),
    #[error("degree {0} not materialized for this series")]
    DegreeUnavailable(usize),
    #[error("flat must be a strict subset of the coordinates")]
    BadFlat,
}
