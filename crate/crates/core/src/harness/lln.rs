use rayon::prelude::*;
use serde::Serialize;

use crate::correspondences::drs;
use crate::sampling::{sample_poisson_square, RngSpec};
use crate::trajectories::line_at;
use crate::{Error, Result};

/// Top-line ratio `M(1; τθ)/θ` averaged over draws, against `2√(1 − |τ|)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LlnRow {
    pub tau: f64,
    pub mean_ratio: f64,
    pub limit: f64,
    pub relative_error: f64,
    pub ratios: Vec<f64>,
}

/// Draw `d` uses `rng.substream(d)`.
pub fn lln_topline(theta: f64, taus: &[f64], draws: usize, rng: RngSpec) -> Result<Vec<LlnRow>> {
    if draws == 0 {
        return Err(Error::InvalidParameter("need at least one draw".into()));
    }
    if let Some(t) = taus.iter().find(|t| !(t.abs() < 1.0)) {
        return Err(Error::InvalidParameter(format!("tau must lie in (-1, 1), got {t}")));
    }
    let per_draw: Vec<Vec<f64>> = (0..draws as u64)
        .into_par_iter()
        .map(|d| {
            let pair = drs(&sample_poisson_square(theta, rng.substream(d))?);
            taus.iter()
                .map(|&tau| Ok(line_at(&pair, 1, tau * theta)? as f64 / theta))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    Ok(taus
        .iter()
        .enumerate()
        .map(|(i, &tau)| {
            let ratios: Vec<f64> = per_draw.iter().map(|r| r[i]).collect();
            let mean_ratio = ratios.iter().sum::<f64>() / draws as f64;
            let limit = 2.0 * (1.0 - tau.abs()).sqrt();
            LlnRow { tau, mean_ratio, limit, relative_error: (mean_ratio - limit).abs() / limit, ratios }
        })
        .collect())
}
