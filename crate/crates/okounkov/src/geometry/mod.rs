//! Exact rational linear algebra, polytopes, cones, lattice enumeration and
//! the L-infinity Hausdorff metric. Everything here is exact: vertices,
//! halfspaces, volumes and distances are rationals over arbitrary-precision
//! integers, and every decision is an exact comparison.

mod cone;
mod dd;
mod distance;
mod hull;
mod lattice;
pub mod linalg;
mod lp;
mod polytope;
mod vec;
mod volume;

pub use cone::{ConeSlice, RatCone};
pub use distance::{hausdorff_distance, point_polytope_distance};
pub use hull::convex_hull;
pub use lattice::{lattice_index, lattice_points, LatticeIndex};
pub use lp::{solve_lp, LpConstraint, LpOutcome, LpProblem, Rel};
pub use polytope::{Halfspace, RatPolytope};
pub use vec::RatVec;

use thiserror::Error;

/// Hull and volume machinery is guaranteed for ambient dimension up to this
/// bound; cones in higher ambient dimension are handled through generator
/// lists and slicing instead.
pub const MAX_HULL_DIM: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient dimension {0} above the hull cap {MAX_HULL_DIM}")]
    AmbientDimTooLarge(usize),
    #[error("undefined distance to empty body")]
    EmptyBody,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("cone slice is unbounded (defect: graded slices must be bounded)")]
    UnboundedSlice,
    #[error("cone slice height must be nonzero")]
    ZeroHeight,
    #[error("scale factor must be nonnegative")]
    NegativeScale,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("linear program failed: {0}")]
    Lp(String),
    #[error("lattice point coordinate out of i64 range")]
    LatticeOverflow,
}
