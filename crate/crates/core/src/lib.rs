//! Poissonized Robinson-Schensted process and its geometric-RSK discretization.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`] – Young diagrams, skew shapes, tableaux and exact counting
//!   (hook-length, Aitken and Jacobi-Trudi) with brute-force enumerators.
//! * [`correspondences`] – RS on permutations, the decorated RS bijection on
//!   planar point configurations, and matrix RSK.
//! * [`trajectories`] – Young-diagram-valued paths and line ensembles on
//!   `[-theta, theta]`.
//! * [`sampling`] – seeded samplers for the Poisson square, the geometric
//!   lattice, Poisson arches and non-intersecting arch ensembles.
//! * [`exactlaw`] – closed-form finite dimensional distributions.
//! * [`harness`] – Monte-Carlo verification, rendering and the suite runner.

pub mod correspondences;
pub mod error;
pub mod exactlaw;
pub mod harness;
pub mod linalg;
pub mod numeric;
pub mod partitions;
pub mod sampling;
pub mod trajectories;

pub use error::{Error, Result};
