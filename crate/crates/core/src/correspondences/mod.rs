//! RS on permutations, the decorated RS bijection on planar point
//! configurations, and RSK on nonnegative integer matrices.
//!
//! JSON encodings: a permutation is its one-line array, a point configuration
//! is `{"theta": θ, "points": [[x, y], ...]}` and a lattice configuration is
//! `{"theta": θ, "k": k, "counts": [[...], ...]}`.

mod decorated;
mod insertion;
mod permutation;
mod rs;
mod rsk;

pub use decorated::{associated_permutation, drs, drs_inverse, DecoratedTableauPair, PointConfiguration};
pub use insertion::{insertion_shape, longest_increasing_subsequence};
pub use permutation::Permutation;
pub use rs::{rs, rs_inverse};
pub use rsk::{rsk, rsk_inverse, LatticeConfiguration, SemistandardPair};
