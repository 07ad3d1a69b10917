use rayon::prelude::*;
use std::collections::BTreeMap;

use super::{VerificationReport, BLOCK_SIZE};
use crate::correspondences::drs;
use crate::sampling::{
    sample_nonintersecting_arches_with, sample_poisson_square_with, ArchCountLaw, RngSpec,
    DEFAULT_MAX_ATTEMPTS,
};
use crate::trajectories::diagram_at;
use crate::{Error, Result};

type Tally = BTreeMap<Vec<i64>, u64>;

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

fn tally_blocks(samples: u64, rng: RngSpec, block: impl Fn(u64, RngSpec) -> Result<Tally> + Sync) -> Result<Tally> {
    (0..samples.div_ceil(BLOCK_SIZE))
        .into_par_iter()
        .map(|b| block(BLOCK_SIZE.min(samples - b * BLOCK_SIZE), rng.substream(b)))
        .try_reduce(Tally::new, |a, b| Ok(merge(a, b)))
}

fn arch_side(theta: f64, n: usize, times: &[f64], samples: u64, rng: RngSpec) -> Result<Tally> {
    let law = ArchCountLaw::new(theta)?;
    tally_blocks(samples, rng, |count, spec| {
        let mut r = spec.rng();
        let mut tally = Tally::new();
        for _ in 0..count {
            let paths = sample_nonintersecting_arches_with(&law, n, &mut r, DEFAULT_MAX_ATTEMPTS)?;
            let mut key = Vec::with_capacity(n * times.len());
            for &t in times {
                for p in &paths {
                    key.push(p.value_at(t)?);
                }
            }
            *tally.entry(key).or_default() += 1;
        }
        Ok(tally)
    })
}

/// Top `n` lines of the Poissonized RS ensemble, accepted when lines below
/// `n` never move, i.e. when `λ(0)` has at most `n` rows. Values are
/// reported as `λ_j(t) - j + 1` so that frozen line `j` sits at `1 - j`, the
/// arches' starting level.
fn line_side(theta: f64, n: usize, times: &[f64], samples: u64, rng: RngSpec) -> Result<Tally> {
    tally_blocks(samples, rng, |count, spec| {
        let mut r = spec.rng();
        let mut tally = Tally::new();
        let mut accepted = 0;
        let mut attempts = 0u64;
        while accepted < count {
            attempts += 1;
            if attempts > DEFAULT_MAX_ATTEMPTS {
                return Err(Error::AttemptsExhausted(DEFAULT_MAX_ATTEMPTS));
            }
            let pair = drs(&sample_poisson_square_with(theta, &mut r)?);
            if pair.shape().num_rows() > n {
                continue;
            }
            accepted += 1;
            let mut key = Vec::with_capacity(n * times.len());
            for &t in times {
                let d = diagram_at(&pair, t)?;
                key.extend((0..n).map(|j| d.row(j) as i64 - j as i64));
            }
            *tally.entry(key).or_default() += 1;
        }
        Ok(tally)
    })
}

/// Compares the joint law of `n` non-intersecting Poisson arches at `times`
/// with that of the top `n` lines of the Poissonized RS ensemble conditioned
/// on the remaining lines staying frozen. Both sides are sampled
/// (`samples` accepted draws each); one pooled two-proportion report is
/// produced per value tuple whose pooled frequency is at least 1%.
pub fn verify_arches(
    theta: f64,
    n: usize,
    times: &[f64],
    samples: u64,
    rng: RngSpec,
    threshold: f64,
) -> Result<Vec<VerificationReport>> {
    if n == 0 || times.is_empty() {
        return Err(Error::InvalidParameter("need at least one arch and one time".into()));
    }
    for &t in times {
        crate::trajectories::check_time(t, theta)?;
    }
    let arches = arch_side(theta, n, times, samples, rng.substream(u64::MAX))?;
    let lines = line_side(theta, n, times, samples, rng.substream(u64::MAX - 1))?;
    let mut keys: Vec<&Vec<i64>> = arches.keys().chain(lines.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut reports = Vec::new();
    for key in keys {
        let a = arches.get(key).copied().unwrap_or(0);
        let l = lines.get(key).copied().unwrap_or(0);
        if ((a + l) as f64) < 0.01 * (2 * samples) as f64 {
            continue;
        }
        let name = format!("arches N={n} theta={theta} times={times:?} values={key:?}");
        reports.push(VerificationReport::two_sided(name, (a, samples), (l, samples), threshold, rng));
    }
    Ok(reports)
}
