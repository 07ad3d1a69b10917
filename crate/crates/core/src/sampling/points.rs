use rand::Rng;
use rand_distr::{Distribution, Poisson};

use super::RngSpec;
use crate::correspondences::{LatticeConfiguration, PointConfiguration};
use crate::{Error, Result};

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("theta must be positive, got {theta}")))
    }
}

/// Rate-one Poisson process on `[0, θ]²`.
pub fn sample_poisson_square(theta: f64, rng: RngSpec) -> Result<PointConfiguration> {
    sample_poisson_square_with(theta, &mut rng.rng())
}

pub fn sample_poisson_square_with<R: Rng + ?Sized>(theta: f64, rng: &mut R) -> Result<PointConfiguration> {
    check_theta(theta)?;
    let count = Poisson::new(theta * theta).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    loop {
        let n = count.sample(rng) as usize;
        let points: Vec<(f64, f64)> = (0..n)
            .map(|_| (theta * rng.gen::<f64>(), theta * rng.gen::<f64>()))
            .collect();
        match PointConfiguration::new(theta, points) {
            Ok(c) => return Ok(c),
            Err(Error::DuplicateCoordinate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
}

/// `k × k` matrix of i.i.d. geometric counts with `P(ξ = x) = (1 − q) q^x`,
/// `q = θ²/k²`.
pub fn sample_geometric_lattice(theta: f64, k: u32, rng: RngSpec) -> Result<LatticeConfiguration> {
    sample_geometric_lattice_with(theta, k, &mut rng.rng())
}

pub fn sample_geometric_lattice_with<R: Rng + ?Sized>(
    theta: f64,
    k: u32,
    rng: &mut R,
) -> Result<LatticeConfiguration> {
    check_theta(theta)?;
    if k == 0 || theta >= k as f64 {
        return Err(Error::InvalidParameter(format!("need 0 < theta < k, got theta={theta}, k={k}")));
    }
    let ln_q = 2.0 * (theta / k as f64).ln();
    let counts = (0..k)
        .map(|_| {
            (0..k)
                .map(|_| {
                    // P(ξ >= x) = P(U <= q^x) for U uniform on (0, 1]
                    let u = 1.0 - rng.gen::<f64>();
                    (u.ln() / ln_q).floor() as u64
                })
                .collect()
        })
        .collect();
    LatticeConfiguration::new(theta, k, counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let s = RngSpec::new(11, 3);
        assert_eq!(sample_poisson_square(2.0, s).unwrap(), sample_poisson_square(2.0, s).unwrap());
        assert_eq!(
            sample_geometric_lattice(1.0, 3, s).unwrap(),
            sample_geometric_lattice(1.0, 3, s).unwrap()
        );
    }

    #[test]
    fn points_lie_in_the_square() {
        let c = sample_poisson_square(3.0, RngSpec::new(1, 0)).unwrap();
        assert!(c.points().iter().all(|&(x, y)| (0.0..=3.0).contains(&x) && (0.0..=3.0).contains(&y)));
    }

    #[test]
    fn rejects_bad_parameters() {
        let s = RngSpec::new(0, 0);
        assert!(sample_poisson_square(0.0, s).is_err());
        assert!(sample_geometric_lattice(2.0, 2, s).is_err());
        assert!(sample_geometric_lattice(0.5, 0, s).is_err());
    }
}
