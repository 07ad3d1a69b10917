use serde::{Deserialize, Serialize};
use std::fmt;

use crate::{Error, Result};

/// A partition stored as its weakly decreasing nonzero row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    /// Builds a diagram, dropping trailing zero rows.
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(rows));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Assumes `rows` is already a canonical partition.
    pub(crate) fn from_canonical(rows: Vec<u32>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(rows.last() != Some(&0));
        YoungDiagram { rows }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Length of row `i` (0-based); rows past the end read as 0.
    pub fn row(&self, i: usize) -> u32 {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|&r| r as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, inner: &YoungDiagram) -> bool {
        contains(self, inner)
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.row(0);
        let cols = (0..width)
            .map(|j| self.rows.iter().take_while(|&&r| r > j).count() as u32)
            .collect();
        YoungDiagram::from_canonical(cols)
    }

    /// Cells `(row, column)`, both 0-based, in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j)))
    }

    /// Hook length of cell `(i, j)`.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.row(i) as usize - j - 1;
        let leg = self.rows[i + 1..].iter().take_while(|&&r| r as usize > j).count();
        arm + leg + 1
    }

    /// Row indices where a box can be appended.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.rows.len())
            .filter(|&i| i == 0 || self.row(i - 1) > self.row(i))
            .collect()
    }

    /// Row indices whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .collect()
    }

    pub fn with_box_added(&self, i: usize) -> YoungDiagram {
        let mut rows = self.rows.clone();
        if i == rows.len() {
            rows.push(1);
        } else {
            rows[i] += 1;
        }
        YoungDiagram::from_canonical(rows)
    }

    pub fn with_box_removed(&self, i: usize) -> YoungDiagram {
        let mut rows = self.rows.clone();
        rows[i] -= 1;
        if rows[i] == 0 {
            rows.pop();
        }
        YoungDiagram::from_canonical(rows)
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn partitions_of(n: usize) -> Vec<YoungDiagram> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if rem == 0 {
                out.push(YoungDiagram::from_canonical(cur.clone()));
                return;
            }
            for part in (1..=rem.min(max)).rev() {
                cur.push(part);
                go(rem - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, ordered by size.
    pub fn partitions_up_to(n: usize) -> Vec<YoungDiagram> {
        (0..=n).flat_map(Self::partitions_of).collect()
    }

    /// Every diagram contained in `self` (including `∅` and `self`).
    pub fn subdiagrams(&self) -> Vec<YoungDiagram> {
        fn go(outer: &[u32], i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if i == outer.len() {
                let mut rows = cur.clone();
                while rows.last() == Some(&0) {
                    rows.pop();
                }
                out.push(YoungDiagram::from_canonical(rows));
                return;
            }
            for r in 0..=outer[i].min(max) {
                cur.push(r);
                go(outer, i + 1, r, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.rows, 0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Every diagram containing `self` with at most `max_size` boxes.
    pub fn superdiagrams_up_to(&self, max_size: usize) -> Vec<YoungDiagram> {
        (self.size()..=max_size)
            .flat_map(YoungDiagram::partitions_of)
            .filter(|nu| nu.contains(self))
            .collect()
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;
    fn try_from(rows: Vec<u32>) -> Result<Self> {
        YoungDiagram::new(rows)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Self {
        d.rows
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Rowwise containment `inner ⊆ outer`; missing rows read as 0.
pub fn contains(outer: &YoungDiagram, inner: &YoungDiagram) -> bool {
    inner.num_rows() <= outer.num_rows()
        && inner.rows.iter().zip(&outer.rows).all(|(a, b)| a <= b)
}

/// The cells of `outer` not in `inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSkew")]
pub struct SkewShape {
    outer: YoungDiagram,
    inner: YoungDiagram,
}

#[derive(Deserialize)]
struct RawSkew {
    outer: YoungDiagram,
    #[serde(default)]
    inner: YoungDiagram,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = Error;
    fn try_from(raw: RawSkew) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl SkewShape {
    pub fn new(outer: YoungDiagram, inner: YoungDiagram) -> Result<Self> {
        if !contains(&outer, &inner) {
            return Err(Error::NotContained {
                outer: outer.rows,
                inner: inner.rows,
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: YoungDiagram) -> Self {
        SkewShape {
            outer,
            inner: YoungDiagram::empty(),
        }
    }

    pub fn outer(&self) -> &YoungDiagram {
        &self.outer
    }

    pub fn inner(&self) -> &YoungDiagram {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Skew cells `(row, column)` in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer.rows.iter().enumerate().flat_map(move |(i, &r)| {
            (self.inner.row(i) as usize..r as usize).map(move |j| (i, j))
        })
    }

    pub fn has_cell(&self, i: usize, j: usize) -> bool {
        (j as u32) < self.outer.row(i) && (j as u32) >= self.inner.row(i)
    }
}
