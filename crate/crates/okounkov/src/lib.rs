//! Exact-rational Okounkov bodies for adelic divisors on toric instances:
//! polytope geometry, lexicographic valuations of graded linear series,
//! Cauchy sequences of toric model divisors, truncated and exact bodies with
//! certified volume data, base loci, and two-parameter global cones whose
//! fibers recover the bodies of divisor combinations.
//!
//! The crate is a library first; see the `examples/` directory for one
//! runnable program per capability and `src/main.rs` for the thin
//! subcommand driver.

pub mod adelic;
pub mod body;
pub mod cli;
pub mod geometry;
pub mod global;
pub mod instance;
pub mod report;
pub mod verify;
pub mod series;
pub mod rational;
