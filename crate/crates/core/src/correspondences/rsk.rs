use serde::{Deserialize, Serialize};

use super::insertion::{reverse_bump, row_insert};
use crate::partitions::{SemistandardTableau, YoungDiagram};
use crate::{Error, Result};

/// A `k × k` matrix of point multiplicities on the lattice
/// `{θ/k, 2θ/k, …, θ}²`; `counts[a][b]` sits at `((a+1)θ/k, (b+1)θ/k)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawLattice")]
pub struct LatticeConfiguration {
    theta: OrderedTheta,
    k: u32,
    counts: Vec<Vec<u64>>,
}

/// θ wrapper so the configuration can derive `Eq`; always finite and positive.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
struct OrderedTheta(f64);
impl Eq for OrderedTheta {}

#[derive(Deserialize)]
struct RawLattice {
    theta: f64,
    k: u32,
    counts: Vec<Vec<u64>>,
}

impl TryFrom<RawLattice> for LatticeConfiguration {
    type Error = Error;
    fn try_from(r: RawLattice) -> Result<Self> {
        LatticeConfiguration::new(r.theta, r.k, r.counts)
    }
}

impl LatticeConfiguration {
    pub fn new(theta: f64, k: u32, counts: Vec<Vec<u64>>) -> Result<Self> {
        if !(theta.is_finite() && theta > 0.0) {
            return Err(Error::InvalidConfiguration(format!("theta must be positive, got {theta}")));
        }
        if k == 0 {
            return Err(Error::InvalidConfiguration("k must be positive".into()));
        }
        if counts.len() != k as usize || counts.iter().any(|r| r.len() != k as usize) {
            return Err(Error::InvalidConfiguration(format!("counts must be a {k}×{k} matrix")));
        }
        Ok(LatticeConfiguration {
            theta: OrderedTheta(theta),
            k,
            counts,
        })
    }

    pub fn zeros(theta: f64, k: u32) -> Result<Self> {
        Self::new(theta, k, vec![vec![0; k as usize]; k as usize])
    }

    pub fn theta(&self) -> f64 {
        self.theta.0
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }
}

/// Two semistandard tableaux of a common straight shape and common bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SemistandardPair {
    left: SemistandardTableau,
    right: SemistandardTableau,
}

impl SemistandardPair {
    pub fn new(left: SemistandardTableau, right: SemistandardTableau) -> Result<Self> {
        if !left.is_straight() || !right.is_straight() {
            return Err(Error::InvalidPair("tableaux must have straight shape".into()));
        }
        if left.shape() != right.shape() {
            return Err(Error::ShapeMismatch {
                left: left.shape().rows().to_vec(),
                right: right.shape().rows().to_vec(),
            });
        }
        if left.bound() != right.bound() {
            return Err(Error::InvalidPair(format!(
                "bounds differ: {} vs {}",
                left.bound(),
                right.bound()
            )));
        }
        Ok(SemistandardPair { left, right })
    }

    /// Insertion tableau; its entries are column indices.
    pub fn left(&self) -> &SemistandardTableau {
        &self.left
    }

    /// Recording tableau; its entries are row indices.
    pub fn right(&self) -> &SemistandardTableau {
        &self.right
    }

    pub fn shape(&self) -> &YoungDiagram {
        self.left.shape()
    }

    pub fn bound(&self) -> u32 {
        self.left.bound()
    }
}

/// RSK on the generalized permutation read from `matrix` in lexicographic
/// (row, column) order: column indices are inserted, row indices recorded.
pub fn rsk(matrix: &LatticeConfiguration) -> SemistandardPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (a, row) in matrix.counts.iter().enumerate() {
        for (b, &m) in row.iter().enumerate() {
            for _ in 0..m {
                let r = row_insert(&mut p, b as u32 + 1);
                if r == q.len() {
                    q.push(Vec::new());
                }
                q[r].push(a as u32 + 1);
            }
        }
    }
    SemistandardPair {
        left: SemistandardTableau::from_rows_unchecked(p, matrix.k),
        right: SemistandardTableau::from_rows_unchecked(q, matrix.k),
    }
}

/// Inverse of [`rsk`]. The pair does not carry θ, so it is supplied here.
pub fn rsk_inverse(pair: &SemistandardPair, theta: f64) -> Result<LatticeConfiguration> {
    let k = pair.bound();
    let mut counts = vec![vec![0u64; k as usize]; k as usize];
    let mut p = pair.left.rows().to_vec();
    let mut q = pair.right.rows().to_vec();
    while !q.is_empty() {
        // rightmost occurrence of the largest recording entry
        let (r, _) = q
            .iter()
            .enumerate()
            .map(|(r, row)| (r, (*row.last().unwrap(), row.len())))
            .max_by_key(|&(_, key)| key)
            .unwrap();
        let a = q[r].pop().unwrap();
        if q[r].is_empty() {
            q.pop();
        }
        let b = reverse_bump(&mut p, r);
        counts[a as usize - 1][b as usize - 1] += 1;
    }
    LatticeConfiguration::new(theta, k, counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_gives_empty_pair() {
        let m = LatticeConfiguration::zeros(1.0, 3).unwrap();
        let pair = rsk(&m);
        assert_eq!(pair.shape().size(), 0);
        assert_eq!(rsk_inverse(&pair, 1.0).unwrap(), m);
    }

    #[test]
    fn single_cell_gives_a_row_of_ones() {
        let m = LatticeConfiguration::new(0.5, 1, vec![vec![4]]).unwrap();
        let pair = rsk(&m);
        assert_eq!(pair.left().rows(), &[vec![1, 1, 1, 1]]);
        assert_eq!(pair.right().rows(), &[vec![1, 1, 1, 1]]);
        let back = SemistandardPair::new(
            SemistandardTableau::new(vec![vec![1, 1, 1, 1]], 1).unwrap(),
            SemistandardTableau::new(vec![vec![1, 1, 1, 1]], 1).unwrap(),
        )
        .unwrap();
        assert_eq!(rsk_inverse(&back, 0.5).unwrap(), m);
    }

    #[test]
    fn two_by_two_examples() {
        // generalized permutation (1→1),(2→2): increasing, one row
        let id = LatticeConfiguration::new(1.0, 2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let pair = rsk(&id);
        assert_eq!(pair.left().rows(), &[vec![1, 2]]);
        assert_eq!(pair.right().rows(), &[vec![1, 2]]);
        // (1→2),(2→1): 1 bumps 2
        let anti = LatticeConfiguration::new(1.0, 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let pair = rsk(&anti);
        assert_eq!(pair.left().rows(), &[vec![1], vec![2]]);
        assert_eq!(pair.right().rows(), &[vec![1], vec![2]]);
        assert_eq!(rsk_inverse(&pair, 1.0).unwrap(), anti);
    }

    #[test]
    fn malformed_pairs_are_rejected() {
        let a = SemistandardTableau::new(vec![vec![1, 2]], 2).unwrap();
        let b = SemistandardTableau::new(vec![vec![1], vec![2]], 2).unwrap();
        let c = SemistandardTableau::new(vec![vec![1, 2]], 3).unwrap();
        assert!(SemistandardPair::new(a.clone(), b).is_err());
        assert!(SemistandardPair::new(a, c).is_err());
        assert!(LatticeConfiguration::new(1.0, 2, vec![vec![0, 0]]).is_err());
    }
}
