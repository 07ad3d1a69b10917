use rand::Rng;
use serde::{Deserialize, Serialize};

use super::RngSpec;
use crate::numeric::ln_factorial;
use crate::{Error, Result};

pub const DEFAULT_MAX_ATTEMPTS: u64 = 10_000_000;

/// Path of a Poisson arch: up-jumps at `s - θ` for `s` in `jump_times_left`,
/// down-jumps just after `θ - r` for `r` in `jump_times_right`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArchPath {
    pub theta: f64,
    pub initial: i64,
    pub jump_times_left: Vec<f64>,
    pub jump_times_right: Vec<f64>,
}

impl ArchPath {
    pub fn jumps(&self) -> usize {
        self.jump_times_left.len()
    }

    /// `x + #{s <= θ + t}` for `t < 0` and `x + #{r <= θ - t}` for `t >= 0`.
    pub fn value_at(&self, t: f64) -> Result<i64> {
        crate::trajectories::check_time(t, self.theta)?;
        let n = if t < 0.0 {
            self.jump_times_left.partition_point(|&s| s - self.theta <= t)
        } else {
            self.jump_times_right.partition_point(|&r| self.theta - r >= t)
        };
        Ok(self.initial + n as i64)
    }

    /// Times at which the path may change value.
    pub fn critical_times(&self) -> impl Iterator<Item = f64> + '_ {
        let th = self.theta;
        self.jump_times_left
            .iter()
            .map(move |&s| s - th)
            .chain(self.jump_times_right.iter().map(move |&r| th - r))
    }
}

/// Law of the common jump count `n`, `P(n) ∝ (θⁿ/n!)²`, tabulated for
/// inversion sampling.
#[derive(Clone, Debug)]
pub struct ArchCountLaw {
    theta: f64,
    cdf: Vec<f64>,
}

impl ArchCountLaw {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta.is_finite() && theta > 0.0) {
            return Err(Error::InvalidParameter(format!("theta must be positive, got {theta}")));
        }
        let ln_w = |n: usize| 2.0 * (n as f64 * theta.ln() - ln_factorial(n as u64));
        let mode = theta.floor() as usize;
        let peak = ln_w(mode);
        let mut weights = Vec::new();
        let mut n = 0;
        loop {
            let w = (ln_w(n) - peak).exp();
            weights.push(w);
            if n > mode && w < 1e-18 {
                break;
            }
            n += 1;
        }
        let total: f64 = weights.iter().sum();
        let mut acc = 0.0;
        let cdf = weights
            .iter()
            .map(|w| {
                acc += w / total;
                acc
            })
            .collect();
        Ok(ArchCountLaw { theta, cdf })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn probability(&self, n: usize) -> f64 {
        match n {
            0 => self.cdf[0],
            _ if n < self.cdf.len() => self.cdf[n] - self.cdf[n - 1],
            _ => 0.0,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen();
        self.cdf.partition_point(|&c| c <= u).min(self.cdf.len() - 1)
    }

    fn sample_path<R: Rng + ?Sized>(&self, initial: i64, rng: &mut R) -> ArchPath {
        let n = self.sample(rng);
        let times = |rng: &mut R| {
            let mut v: Vec<f64> = (0..n).map(|_| self.theta * rng.gen::<f64>()).collect();
            v.sort_by(f64::total_cmp);
            v
        };
        let jump_times_left = times(rng);
        let jump_times_right = times(rng);
        ArchPath { theta: self.theta, initial, jump_times_left, jump_times_right }
    }
}

pub fn sample_poisson_arch(theta: f64, x: i64, rng: RngSpec) -> Result<ArchPath> {
    Ok(sample_poisson_arch_with(&ArchCountLaw::new(theta)?, x, &mut rng.rng()))
}

pub fn sample_poisson_arch_with<R: Rng + ?Sized>(law: &ArchCountLaw, x: i64, rng: &mut R) -> ArchPath {
    law.sample_path(x, rng)
}

fn strictly_ordered(paths: &[ArchPath]) -> bool {
    if paths.len() < 2 {
        return true;
    }
    let theta = paths[0].theta;
    let mut times: Vec<f64> = vec![-theta, 0.0, theta];
    times.extend(paths.iter().flat_map(|p| p.critical_times()));
    times.sort_by(f64::total_cmp);
    times.dedup();
    let mids: Vec<f64> = times.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    times.iter().chain(&mids).all(|&t| {
        paths
            .windows(2)
            .all(|w| w[0].value_at(t).unwrap() > w[1].value_at(t).unwrap())
    })
}

/// `n` arches started at `1 - i`, resampled jointly until strictly ordered at
/// all times.
pub fn sample_nonintersecting_arches(
    theta: f64,
    n: usize,
    rng: RngSpec,
    max_attempts: u64,
) -> Result<Vec<ArchPath>> {
    sample_nonintersecting_arches_with(&ArchCountLaw::new(theta)?, n, &mut rng.rng(), max_attempts)
}

pub fn sample_nonintersecting_arches_with<R: Rng + ?Sized>(
    law: &ArchCountLaw,
    n: usize,
    rng: &mut R,
    max_attempts: u64,
) -> Result<Vec<ArchPath>> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one arch".into()));
    }
    for _ in 0..max_attempts {
        let paths: Vec<ArchPath> = (1..=n as i64).map(|i| law.sample_path(1 - i, rng)).collect();
        if strictly_ordered(&paths) {
            return Ok(paths);
        }
    }
    Err(Error::AttemptsExhausted(max_attempts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arch_returns_to_start_and_is_continuous_at_zero() {
        for seed in 0..50 {
            let a = sample_poisson_arch(1.5, 3, RngSpec::new(seed, 0)).unwrap();
            assert_eq!(a.value_at(-1.5).unwrap(), 3);
            assert_eq!(a.value_at(1.5).unwrap(), 3);
            assert_eq!(a.value_at(-1e-12).unwrap(), a.value_at(0.0).unwrap());
            assert_eq!(a.value_at(0.0).unwrap(), 3 + a.jumps() as i64);
        }
    }

    #[test]
    fn count_law_matches_series() {
        let law = ArchCountLaw::new(0.7).unwrap();
        let w: Vec<f64> = (0..30)
            .map(|n| (0.7f64.powi(n) / (1..=n).map(f64::from).product::<f64>()).powi(2))
            .collect();
        let z: f64 = w.iter().sum();
        for (n, wn) in w.iter().enumerate().take(6) {
            assert!((law.probability(n) - wn / z).abs() < 1e-14);
        }
    }

    #[test]
    fn nonintersecting_sample_is_ordered() {
        let s = RngSpec::new(5, 9);
        let paths = sample_nonintersecting_arches(0.8, 3, s, DEFAULT_MAX_ATTEMPTS).unwrap();
        assert_eq!(paths, sample_nonintersecting_arches(0.8, 3, s, DEFAULT_MAX_ATTEMPTS).unwrap());
        for i in 0..=200 {
            let t = -0.8 + i as f64 * 0.008;
            let t = t.min(0.8);
            let v: Vec<i64> = paths.iter().map(|p| p.value_at(t).unwrap()).collect();
            assert!(v.windows(2).all(|w| w[0] > w[1]), "{v:?} at {t}");
        }
        let one = sample_nonintersecting_arches(0.8, 1, s, 1).unwrap();
        assert_eq!(one[0].initial, 0);
    }

    #[test]
    fn exhausted_budget() {
        let r = sample_nonintersecting_arches(6.0, 4, RngSpec::new(0, 0), 3);
        assert_eq!(r, Err(Error::AttemptsExhausted(3)));
    }
}
