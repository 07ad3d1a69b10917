//! Young-diagram-valued paths and line ensembles on `[-θ, θ]`.
//!
//! For `t <= 0` the diagram is read from the left tableau (cells whose
//! decoration `d` satisfies `d - θ <= t`), for `t >= 0` from the right tableau
//! (`θ - d >= t`). A growing cell is present from its event time on; a
//! shrinking cell is still present at its event time.

mod continuous;
mod curve;
mod discrete;
mod export;
pub mod lattice;

pub use continuous::{diagram_at, full_trajectory, line_at};
pub use curve::curve_process;
pub use discrete::{discrete_diagram_at, discrete_line_at, discrete_trajectory};
pub use export::{DiagramTrajectory, EventKind, LineChange, TrajectoryEvent};

use crate::{Error, Result};

pub(crate) fn check_time(t: f64, theta: f64) -> Result<()> {
    if t.is_nan() || t < -theta || t > theta {
        return Err(Error::TimeOutOfRange { t, theta });
    }
    Ok(())
}

/// Time at which a left-decorated cell appears.
#[inline]
pub(crate) fn grow_time(decoration: f64, theta: f64) -> f64 {
    decoration - theta
}

/// Last time at which a right-decorated cell is present.
#[inline]
pub(crate) fn shrink_time(decoration: f64, theta: f64) -> f64 {
    theta - decoration
}
