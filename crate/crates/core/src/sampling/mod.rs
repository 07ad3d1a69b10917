//! Seeded samplers for the point processes behind both models.
//!
//! Every sampler comes in two forms: one taking an [`RngSpec`], which is a
//! pure function of its arguments, and a `*_with` form drawing from a caller
//! supplied generator so that hot loops avoid reseeding.

mod arches;
mod points;
mod rng;

pub use arches::{
    sample_nonintersecting_arches, sample_nonintersecting_arches_with, sample_poisson_arch,
    sample_poisson_arch_with, ArchCountLaw, ArchPath, DEFAULT_MAX_ATTEMPTS,
};
pub use points::{
    sample_geometric_lattice, sample_geometric_lattice_with, sample_poisson_square,
    sample_poisson_square_with,
};
pub use rng::{RngSpec, SampleRng};
