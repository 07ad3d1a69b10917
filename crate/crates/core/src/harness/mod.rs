//! Monte-Carlo verification against the exact laws, first-order asymptotics,
//! ensemble rendering and the check registry behind `rsprocess verify`.

mod arches;
mod checks;
mod estimate;
mod lln;
mod render;
mod report;
mod suite;

pub use arches::verify_arches;
pub use checks::{registry, Check, CheckContext, CheckOutcome};
pub use estimate::{
    count_hits, estimate_fdd, estimate_fdd_batch, estimate_marginals, Model, BLOCK_SIZE,
};
pub use lln::{lln_topline, LlnRow};
pub use render::{render_csv, render_ensemble, render_svg, RenderFormat, RenderSummary};
pub use report::{VerificationReport, DEFAULT_THRESHOLD};
pub use suite::{run_suite, run_suite_config, ExperimentConfig, ModelKind, SuiteConfig, SuiteOutcome};

/// Version string embedded in report files.
pub fn code_version() -> &'static str {
    option_env!("RSPROCESS_GIT_DESCRIBE").unwrap_or(env!("CARGO_PKG_VERSION"))
}
