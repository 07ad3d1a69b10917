use rayon::prelude::*;

use super::VerificationReport;
use crate::correspondences::{drs, rsk};
use crate::exactlaw::{fdd_continuous, fdd_discrete, marginal_continuous, FddQuery, Pin};
use crate::partitions::YoungDiagram;
use crate::sampling::{sample_geometric_lattice_with, sample_poisson_square_with, RngSpec};
use crate::trajectories::{diagram_at, discrete_diagram_at};
use crate::{Error, Result};

/// Samples per independently seeded block.
pub const BLOCK_SIZE: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Continuous,
    Discrete { k: u32 },
}

impl Model {
    pub fn of(query: &FddQuery) -> Model {
        match query.discrete_k() {
            Some(k) => Model::Discrete { k },
            None => Model::Continuous,
        }
    }
}

fn matches_all(value: impl Fn(f64) -> Result<YoungDiagram>, pins: &[Pin]) -> Result<bool> {
    for p in pins {
        if value(p.time)? != p.diagram {
            return Ok(false);
        }
    }
    Ok(true)
}

fn count_block(
    model: Model,
    theta: f64,
    pin_sets: &[Vec<Pin>],
    n: u64,
    spec: RngSpec,
) -> Result<Vec<u64>> {
    let mut rng = spec.rng();
    let mut hits = vec![0u64; pin_sets.len()];
    for _ in 0..n {
        match model {
            Model::Continuous => {
                let pair = drs(&sample_poisson_square_with(theta, &mut rng)?);
                for (h, pins) in hits.iter_mut().zip(pin_sets) {
                    *h += matches_all(|t| diagram_at(&pair, t), pins)? as u64;
                }
            }
            Model::Discrete { k } => {
                let pair = rsk(&sample_geometric_lattice_with(theta, k, &mut rng)?);
                for (h, pins) in hits.iter_mut().zip(pin_sets) {
                    *h += matches_all(|t| discrete_diagram_at(&pair, theta, k, t), pins)? as u64;
                }
            }
        }
    }
    Ok(hits)
}

/// Number of samples, out of `samples`, whose diagram process matches every
/// pin of each set. Samples are drawn in blocks of [`BLOCK_SIZE`], block `b`
/// from `rng.substream(b)`, so the counts do not depend on `parallel`.
pub fn count_hits(
    model: Model,
    theta: f64,
    pin_sets: &[Vec<Pin>],
    samples: u64,
    rng: RngSpec,
    parallel: bool,
) -> Result<Vec<u64>> {
    let blocks = samples.div_ceil(BLOCK_SIZE);
    let block = |b: u64| {
        let n = BLOCK_SIZE.min(samples - b * BLOCK_SIZE);
        count_block(model, theta, pin_sets, n, rng.substream(b))
    };
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    let zero = vec![0u64; pin_sets.len()];
    if parallel {
        (0..blocks)
            .into_par_iter()
            .map(block)
            .try_reduce(|| zero.clone(), |a, b| Ok(add(a, b)))
    } else {
        (0..blocks).map(block).try_fold(zero.clone(), |a, b| Ok(add(a, b?)))
    }
}

fn exact_value(query: &FddQuery) -> Result<f64> {
    Ok(match query.discrete_k() {
        Some(_) => fdd_discrete(query)?,
        None => fdd_continuous(query)?,
    }
    .probability())
}

fn query_name(query: &FddQuery) -> String {
    let pins: Vec<String> = query.pins().iter().map(|p| format!("({}, {})", p.time, p.diagram)).collect();
    match query.discrete_k() {
        Some(k) => format!("fdd k={k} theta={} {{{}}}", query.theta(), pins.join(", ")),
        None => format!("fdd theta={} {{{}}}", query.theta(), pins.join(", ")),
    }
}

/// Empirical frequency of a query's event against its exact probability.
pub fn estimate_fdd(query: &FddQuery, samples: u64, rng: RngSpec) -> Result<VerificationReport> {
    Ok(estimate_fdd_batch(std::slice::from_ref(query), samples, rng, super::DEFAULT_THRESHOLD)?.remove(0))
}

/// Like [`estimate_fdd`] for several queries of one model and `θ`, counted
/// on a shared set of samples.
pub fn estimate_fdd_batch(
    queries: &[FddQuery],
    samples: u64,
    rng: RngSpec,
    threshold: f64,
) -> Result<Vec<VerificationReport>> {
    let Some(first) = queries.first() else {
        return Ok(Vec::new());
    };
    let (model, theta) = (Model::of(first), first.theta());
    if queries.iter().any(|q| Model::of(q) != model || q.theta() != theta) {
        return Err(Error::InvalidQuery("batched queries must share model and theta".into()));
    }
    let exact: Vec<f64> = queries.iter().map(exact_value).collect::<Result<_>>()?;
    let pin_sets: Vec<Vec<Pin>> = queries.iter().map(|q| q.pins().to_vec()).collect();
    let hits = count_hits(model, theta, &pin_sets, samples, rng, true)?;
    Ok(queries
        .iter()
        .zip(hits)
        .zip(exact)
        .map(|((q, h), e)| VerificationReport::one_sided(query_name(q), h, samples, e, threshold, rng))
        .collect())
}

/// Empirical law of `λ(t)` in the continuous model against the Poissonized
/// Plancherel marginal, one report per diagram.
pub fn estimate_marginals(
    theta: f64,
    t: f64,
    diagrams: &[YoungDiagram],
    samples: u64,
    rng: RngSpec,
    threshold: f64,
) -> Result<Vec<VerificationReport>> {
    let pin_sets: Vec<Vec<Pin>> = diagrams.iter().map(|d| vec![Pin::new(t, d.clone())]).collect();
    let hits = count_hits(Model::Continuous, theta, &pin_sets, samples, rng, true)?;
    diagrams
        .iter()
        .zip(hits)
        .map(|(d, h)| {
            let exact = marginal_continuous(d, t, theta)?.probability();
            let name = format!("marginal theta={theta} t={t} {d}");
            Ok(VerificationReport::one_sided(name, h, samples, exact, threshold, rng))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(r: &[u32]) -> YoungDiagram {
        YoungDiagram::new(r.to_vec()).unwrap()
    }

    #[test]
    fn serial_and_parallel_agree() {
        let sets = vec![vec![Pin::new(0.0, d(&[1]))], vec![Pin::new(-0.5, d(&[])), Pin::new(0.0, d(&[]))]];
        let rng = RngSpec::new(3, 1);
        let a = count_hits(Model::Continuous, 1.0, &sets, 3 * BLOCK_SIZE + 17, rng, false).unwrap();
        let b = count_hits(Model::Continuous, 1.0, &sets, 3 * BLOCK_SIZE + 17, rng, true).unwrap();
        assert_eq!(a, b);
        let a = count_hits(Model::Discrete { k: 2 }, 0.5, &sets, 1000, rng, false).unwrap();
        let b = count_hits(Model::Discrete { k: 2 }, 0.5, &sets, 1000, rng, true).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn small_run_is_consistent() {
        let q = FddQuery::continuous(1.0, vec![Pin::new(0.0, d(&[]))]).unwrap();
        let r = estimate_fdd(&q, 20_000, RngSpec::new(9, 0)).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.samples, 20_000);
    }

    #[test]
    fn mixed_batch_rejected() {
        let a = FddQuery::continuous(1.0, vec![Pin::new(0.0, d(&[]))]).unwrap();
        let b = FddQuery::discrete(1.0, 2, vec![Pin::new(0.0, d(&[]))]).unwrap();
        assert!(estimate_fdd_batch(&[a, b], 10, RngSpec::new(0, 0), 4.0).is_err());
    }
}
