use super::insertion::{reverse_bump, row_insert};
use super::Permutation;
use crate::partitions::StandardTableau;
use crate::{Error, Result};

/// Robinson-Schensted: `σ ↦ (P, Q)` with `P` the row-insertion tableau of
/// `σ(1) … σ(n)` and `Q` the recording tableau.
pub fn rs(perm: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &x) in perm.one_line().iter().enumerate() {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(step as u32 + 1);
    }
    (
        StandardTableau::from_rows_unchecked(p),
        StandardTableau::from_rows_unchecked(q),
    )
}

pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if !p.is_straight() || !q.is_straight() {
        return Err(Error::InvalidTableau("RS needs straight-shape tableaux".into()));
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch {
            left: p.shape().rows().to_vec(),
            right: q.shape().rows().to_vec(),
        });
    }
    let n = p.size();
    // row of each entry of q
    let mut row_of = vec![0usize; n + 1];
    for (r, row) in q.rows().iter().enumerate() {
        for &e in row {
            row_of[e as usize] = r;
        }
    }
    let mut rows = p.rows().to_vec();
    let mut one_line = vec![0u32; n];
    for m in (1..=n).rev() {
        one_line[m - 1] = reverse_bump(&mut rows, row_of[m]);
    }
    Permutation::new(one_line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let (p, q) = rs(&perm(&[1, 2, 3]));
        assert_eq!(p.rows(), &[vec![1, 2, 3]]);
        assert_eq!(q.rows(), &[vec![1, 2, 3]]);

        let (p, q) = rs(&perm(&[2, 1]));
        assert_eq!(p.rows(), &[vec![1], vec![2]]);
        assert_eq!(q.rows(), &[vec![1], vec![2]]);

        let (p, q) = rs(&perm(&[3, 1, 2]));
        assert_eq!(p.rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(q.rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn inverse_examples() {
        let row = StandardTableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(rs_inverse(&row, &row).unwrap(), Permutation::identity(2));
        let col = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(rs_inverse(&col, &col).unwrap(), perm(&[2, 1]));
        assert!(matches!(rs_inverse(&row, &col), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn s3_pairs_hit_each_permutation_once() {
        let mut pairs = Vec::new();
        for shape in crate::partitions::YoungDiagram::partitions_of(3) {
            let s = crate::partitions::SkewShape::straight(shape);
            let tabs =
                crate::partitions::enumerate_standard(&s, Default::default()).unwrap();
            for a in &tabs {
                for b in &tabs {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        assert_eq!(pairs.len(), 6);
        let perms: HashSet<_> = pairs.iter().map(|(a, b)| rs_inverse(a, b).unwrap()).collect();
        assert_eq!(perms.len(), 6);
    }
}
