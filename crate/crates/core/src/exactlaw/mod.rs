//! Closed-form laws of both diagram processes.
//!
//! Probabilities are returned as [`LogProbability`]: a natural-log value plus,
//! where every input is a finite float (and so an exact dyadic rational), an
//! exact shadow of the form `factor · exp(-exp_neg)`.

mod continuous;
mod discrete;
mod karlin;
mod logprob;
mod query;

pub use continuous::{
    fdd_continuous, fdd_continuous_schur_form, marginal_continuous, normalization_continuous,
    plancherel_schur, plancherel_schur_exact, poisson_tail_bound, poissonized_plancherel,
};
pub use discrete::{
    discrete_total_count, fdd_discrete, finite_length_schur, normalization_discrete,
    power_sum_diagnostic, EXACT_DISCRETE_MAX_K,
};
pub use karlin::{diagram_levels, km_block, km_block_exact, Direction};
pub use logprob::{ExactProbability, LogProbability};
pub use query::{FddQuery, Pin};
