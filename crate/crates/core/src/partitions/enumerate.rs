//! Brute-force enumerators used as oracles for the determinant formulas.

use super::{SemistandardTableau, SkewShape, StandardTableau};
use crate::{Error, Result};

/// Upper limits on brute-force enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCap {
    pub size: usize,
    pub bound: u32,
}

impl Default for EnumerationCap {
    fn default() -> Self {
        EnumerationCap { size: 10, bound: 6 }
    }
}

/// Every standard filling of `shape`, each exactly once.
pub fn enumerate_standard(shape: &SkewShape, cap: EnumerationCap) -> Result<Vec<StandardTableau>> {
    if shape.size() > cap.size {
        return Err(Error::CapExceeded {
            what: "shape size",
            value: shape.size(),
            cap: cap.size,
        });
    }
    let outer = shape.outer();
    let inner = shape.inner();
    let height = outer.num_rows();
    let mut filled: Vec<u32> = (0..height).map(|i| inner.row(i)).collect();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); height];
    let mut out = Vec::new();

    fn go(
        next: u32,
        n: u32,
        outer: &[u32],
        filled: &mut Vec<u32>,
        rows: &mut Vec<Vec<u32>>,
        inner: &super::YoungDiagram,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > n {
            let t = StandardTableau::new_skew(inner.clone(), rows.clone())
                .expect("enumerated filling is standard");
            out.push(t);
            return;
        }
        for i in 0..outer.len() {
            let fits_row = filled[i] < outer[i];
            let fits_col = i == 0 || filled[i - 1] > filled[i];
            if fits_row && fits_col {
                filled[i] += 1;
                rows[i].push(next);
                go(next + 1, n, outer, filled, rows, inner, out);
                rows[i].pop();
                filled[i] -= 1;
            }
        }
    }

    go(1, shape.size() as u32, outer.rows(), &mut filled, &mut rows, inner, &mut out);
    Ok(out)
}

/// Every semistandard filling of `shape` with entries in `1..=k`.
pub fn enumerate_ssyt(
    shape: &SkewShape,
    k: u32,
    cap: EnumerationCap,
) -> Result<Vec<SemistandardTableau>> {
    if shape.size() > cap.size {
        return Err(Error::CapExceeded {
            what: "shape size",
            value: shape.size(),
            cap: cap.size,
        });
    }
    if k > cap.bound {
        return Err(Error::CapExceeded {
            what: "entry bound",
            value: k as usize,
            cap: cap.bound as usize,
        });
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let height = shape.outer().num_rows();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); height];
    let mut out = Vec::new();

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        k: u32,
        shape: &SkewShape,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<SemistandardTableau>,
    ) {
        if idx == cells.len() {
            let t = SemistandardTableau::new_skew(shape.inner().clone(), rows.clone(), k)
                .expect("enumerated filling is semistandard");
            out.push(t);
            return;
        }
        let (i, j) = cells[idx];
        let start = shape.inner().row(i) as usize;
        let left = rows[i].last().copied().unwrap_or(1);
        let above = if i > 0 && shape.has_cell(i - 1, j) {
            let s = shape.inner().row(i - 1) as usize;
            rows[i - 1][j - s] + 1
        } else {
            1
        };
        debug_assert_eq!(rows[i].len(), j - start);
        for v in left.max(above)..=k {
            rows[i].push(v);
            go(idx + 1, cells, k, shape, rows, out);
            rows[i].pop();
        }
    }

    go(0, &cells, k, shape, &mut rows, &mut out);
    Ok(out)
}
