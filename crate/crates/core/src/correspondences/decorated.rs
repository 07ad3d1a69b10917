use serde::{Deserialize, Serialize};

use super::{rs, rs_inverse, Permutation};
use crate::partitions::{StandardTableau, YoungDiagram};
use crate::{Error, Result};

/// Finitely many points in `[0, θ]²` with pairwise distinct x- and
/// y-coordinates, stored sorted by x.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawConfiguration")]
pub struct PointConfiguration {
    theta: f64,
    points: Vec<(f64, f64)>,
}

#[derive(Deserialize)]
struct RawConfiguration {
    theta: f64,
    points: Vec<(f64, f64)>,
}

impl TryFrom<RawConfiguration> for PointConfiguration {
    type Error = Error;
    fn try_from(raw: RawConfiguration) -> Result<Self> {
        PointConfiguration::new(raw.theta, raw.points)
    }
}

impl PointConfiguration {
    pub fn new(theta: f64, mut points: Vec<(f64, f64)>) -> Result<Self> {
        if !(theta.is_finite() && theta > 0.0) {
            return Err(Error::InvalidConfiguration(format!("theta must be positive, got {theta}")));
        }
        for &(x, y) in &points {
            let inside = |v: f64| v.is_finite() && (0.0..=theta).contains(&v);
            if !inside(x) || !inside(y) {
                return Err(Error::InvalidConfiguration(format!(
                    "point ({x}, {y}) outside [0, {theta}]²"
                )));
            }
        }
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        if let Some(w) = points.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateCoordinate { axis: 'x', value: w[0].0 });
        }
        let mut ys: Vec<f64> = points.iter().map(|p| p.1).collect();
        ys.sort_by(f64::total_cmp);
        if let Some(w) = ys.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCoordinate { axis: 'y', value: w[0] });
        }
        Ok(PointConfiguration { theta, points })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Points sorted by ascending x.
    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points inside the rectangle `[0, u] × [0, v]`.
    pub fn restrict(&self, u: f64, v: f64) -> PointConfiguration {
        PointConfiguration {
            theta: self.theta,
            points: self
                .points
                .iter()
                .copied()
                .filter(|&(x, y)| x <= u && y <= v)
                .collect(),
        }
    }

    /// y-ranks (1-based) of the points in x order.
    fn y_ranks(&self) -> Vec<u32> {
        let mut order: Vec<usize> = (0..self.points.len()).collect();
        order.sort_by(|&a, &b| self.points[a].1.total_cmp(&self.points[b].1));
        let mut ranks = vec![0u32; self.points.len()];
        for (rank, &i) in order.iter().enumerate() {
            ranks[i] = rank as u32 + 1;
        }
        ranks
    }
}

/// The permutation `σ` with `σ(i)` the rank of the y-coordinate of the `i`-th
/// point in x order.
pub fn associated_permutation(config: &PointConfiguration) -> Permutation {
    Permutation::new(config.y_ranks()).expect("ranks form a permutation")
}

/// Two standard tableaux of a common shape, each carrying strictly increasing
/// decorations in `[0, θ]`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct DecoratedTableauPair {
    theta: f64,
    left: StandardTableau,
    right: StandardTableau,
    left_decorations: Vec<f64>,
    right_decorations: Vec<f64>,
}

#[derive(Deserialize)]
struct RawPair {
    theta: f64,
    left: StandardTableau,
    right: StandardTableau,
    left_decorations: Vec<f64>,
    right_decorations: Vec<f64>,
}

impl TryFrom<RawPair> for DecoratedTableauPair {
    type Error = Error;
    fn try_from(r: RawPair) -> Result<Self> {
        DecoratedTableauPair::new(r.theta, r.left, r.left_decorations, r.right, r.right_decorations)
    }
}

impl DecoratedTableauPair {
    pub fn new(
        theta: f64,
        left: StandardTableau,
        left_decorations: Vec<f64>,
        right: StandardTableau,
        right_decorations: Vec<f64>,
    ) -> Result<Self> {
        if !(theta.is_finite() && theta > 0.0) {
            return Err(Error::InvalidPair(format!("theta must be positive, got {theta}")));
        }
        if !left.is_straight() || !right.is_straight() {
            return Err(Error::InvalidPair("tableaux must have straight shape".into()));
        }
        if left.shape() != right.shape() {
            return Err(Error::ShapeMismatch {
                left: left.shape().rows().to_vec(),
                right: right.shape().rows().to_vec(),
            });
        }
        let n = left.size();
        for (side, decs) in [("left", &left_decorations), ("right", &right_decorations)] {
            if decs.len() != n {
                return Err(Error::InvalidPair(format!(
                    "{side} decorations have length {}, shape has {n} boxes",
                    decs.len()
                )));
            }
            if decs.iter().any(|d| !(d.is_finite() && (0.0..=theta).contains(d))) {
                return Err(Error::InvalidPair(format!("{side} decoration outside [0, {theta}]")));
            }
            if decs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidPair(format!(
                    "{side} decorations not strictly increasing"
                )));
            }
        }
        Ok(DecoratedTableauPair {
            theta,
            left,
            right,
            left_decorations,
            right_decorations,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn left(&self) -> &StandardTableau {
        &self.left
    }

    pub fn right(&self) -> &StandardTableau {
        &self.right
    }

    pub fn left_decorations(&self) -> &[f64] {
        &self.left_decorations
    }

    pub fn right_decorations(&self) -> &[f64] {
        &self.right_decorations
    }

    pub fn shape(&self) -> &YoungDiagram {
        self.left.shape()
    }

    pub fn size(&self) -> usize {
        self.left.size()
    }
}

/// Decorated RS: the tableaux are `rs` of the associated permutation, the
/// left tableau is decorated by the sorted y-values and the right tableau by
/// the sorted x-values.
pub fn drs(config: &PointConfiguration) -> DecoratedTableauPair {
    let sigma = associated_permutation(config);
    let (left, right) = rs(&sigma);
    let right_decorations: Vec<f64> = config.points.iter().map(|p| p.0).collect();
    let mut left_decorations: Vec<f64> = config.points.iter().map(|p| p.1).collect();
    left_decorations.sort_by(f64::total_cmp);
    DecoratedTableauPair {
        theta: config.theta,
        left,
        right,
        left_decorations,
        right_decorations,
    }
}

/// Inverse of [`drs`]: `{(r_i, ℓ_σ(i))}` with `σ = rs_inverse(L, R)`.
pub fn drs_inverse(pair: &DecoratedTableauPair) -> Result<PointConfiguration> {
    let sigma = rs_inverse(&pair.left, &pair.right)?;
    let points = pair
        .right_decorations
        .iter()
        .zip(sigma.one_line())
        .map(|(&r, &s)| (r, pair.left_decorations[s as usize - 1]))
        .collect();
    PointConfiguration::new(pair.theta, points)
}
