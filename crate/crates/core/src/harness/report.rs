use serde::{Deserialize, Serialize};

use crate::sampling::RngSpec;

pub const DEFAULT_THRESHOLD: f64 = 4.0;

/// Outcome of one Bernoulli frequency comparison.
///
/// For one-sided checks `exact` is the evaluator's value; for two-sided checks
/// it is the reference side's frequency and `reference_samples` is set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub samples: u64,
    pub hits: u64,
    pub empirical: f64,
    pub stderr: f64,
    pub exact: f64,
    pub z_score: f64,
    pub threshold: f64,
    pub pass: bool,
    pub seed: u64,
    pub stream: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_samples: Option<u64>,
}

fn z_of(diff: f64, se: f64) -> f64 {
    if se > 0.0 {
        diff / se
    } else if diff == 0.0 {
        0.0
    } else {
        f64::INFINITY.copysign(diff)
    }
}

impl VerificationReport {
    /// Compares `hits / samples` against `exact`. When the empirical frequency
    /// is 0 or 1 the standard error falls back to the one implied by `exact`.
    pub fn one_sided(
        name: impl Into<String>,
        hits: u64,
        samples: u64,
        exact: f64,
        threshold: f64,
        rng: RngSpec,
    ) -> Self {
        let n = samples.max(1) as f64;
        let p = hits as f64 / n;
        let mut stderr = (p * (1.0 - p) / n).sqrt();
        if stderr == 0.0 {
            stderr = (exact * (1.0 - exact) / n).max(0.0).sqrt();
        }
        let z_score = z_of(p - exact, stderr);
        VerificationReport {
            name: name.into(),
            samples,
            hits,
            empirical: p,
            stderr,
            exact,
            z_score,
            threshold,
            pass: z_score.abs() <= threshold,
            seed: rng.seed,
            stream: rng.stream,
            reference_samples: None,
        }
    }

    /// Pooled two-proportion comparison of two Monte-Carlo frequencies.
    pub fn two_sided(
        name: impl Into<String>,
        (hits, samples): (u64, u64),
        (ref_hits, ref_samples): (u64, u64),
        threshold: f64,
        rng: RngSpec,
    ) -> Self {
        let (n1, n2) = (samples.max(1) as f64, ref_samples.max(1) as f64);
        let (p1, p2) = (hits as f64 / n1, ref_hits as f64 / n2);
        let pooled = (hits + ref_hits) as f64 / (n1 + n2);
        let stderr = (pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2)).sqrt();
        let z_score = z_of(p1 - p2, stderr);
        VerificationReport {
            name: name.into(),
            samples,
            hits,
            empirical: p1,
            stderr,
            exact: p2,
            z_score,
            threshold,
            pass: z_score.abs() <= threshold,
            seed: rng.seed,
            stream: rng.stream,
            reference_samples: Some(ref_samples),
        }
    }
}
