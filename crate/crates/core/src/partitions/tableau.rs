use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{SkewShape, YoungDiagram};
use crate::{Error, Result};

/// Row-wise storage of a (possibly skew) filling. `rows[i]` holds the entries
/// of cells `(i, inner_i) .. (i, outer_i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Filling {
    inner: YoungDiagram,
    outer: YoungDiagram,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    fn new(inner: YoungDiagram, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        let height = rows.len().max(inner.num_rows());
        rows.resize(height, Vec::new());
        let outer_rows: Vec<u32> = (0..height)
            .map(|i| inner.row(i) + rows[i].len() as u32)
            .collect();
        let outer = YoungDiagram::new(outer_rows)
            .map_err(|_| Error::InvalidTableau("rows do not form a skew shape".into()))?;
        rows.truncate(outer.num_rows());
        Ok(Filling { inner, outer, rows })
    }

    fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn entry(&self, i: usize, j: usize) -> Option<u32> {
        let start = self.inner.row(i) as usize;
        let row = self.rows.get(i)?;
        j.checked_sub(start).and_then(|k| row.get(k).copied())
    }

    /// Pairs (upper, lower) of vertically adjacent skew cells.
    fn column_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (1..self.rows.len()).flat_map(move |i| {
            let start = self.inner.row(i) as usize;
            self.rows[i].iter().enumerate().filter_map(move |(k, &below)| {
                self.entry(i - 1, start + k).map(|above| (above, below))
            })
        })
    }

    fn serialize_rows<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.inner.is_empty() {
            self.rows.serialize(s)
        } else {
            #[derive(Serialize)]
            struct Skew<'a> {
                inner: &'a YoungDiagram,
                rows: &'a Vec<Vec<u32>>,
            }
            Skew {
                inner: &self.inner,
                rows: &self.rows,
            }
            .serialize(s)
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawFilling {
    Straight(Vec<Vec<u32>>),
    Skew { inner: YoungDiagram, rows: Vec<Vec<u32>> },
}

impl RawFilling {
    fn split(self) -> (YoungDiagram, Vec<Vec<u32>>) {
        match self {
            RawFilling::Straight(rows) => (YoungDiagram::empty(), rows),
            RawFilling::Skew { inner, rows } => (inner, rows),
        }
    }
}

/// A standard filling of a (skew) shape with `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau(Filling);

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new_skew(YoungDiagram::empty(), rows)
    }

    pub fn new_skew(inner: YoungDiagram, rows: Vec<Vec<u32>>) -> Result<Self> {
        let f = Filling::new(inner, rows)?;
        let n = f.size();
        let mut seen = vec![false; n + 1];
        for &e in f.rows.iter().flatten() {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be a permutation of 1..={n}"
                )));
            }
            seen[e] = true;
        }
        if f.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(Error::InvalidTableau("row not strictly increasing".into()));
        }
        if f.column_pairs().any(|(a, b)| a >= b) {
            return Err(Error::InvalidTableau("column not strictly increasing".into()));
        }
        Ok(StandardTableau(f))
    }

    pub fn empty() -> Self {
        StandardTableau(Filling {
            inner: YoungDiagram::empty(),
            outer: YoungDiagram::empty(),
            rows: Vec::new(),
        })
    }

    /// Skips validation; callers guarantee the standard-tableau invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let outer = YoungDiagram::from_canonical(rows.iter().map(|r| r.len() as u32).collect());
        StandardTableau(Filling {
            inner: YoungDiagram::empty(),
            outer,
            rows,
        })
    }

    /// Outer shape.
    pub fn shape(&self) -> &YoungDiagram {
        &self.0.outer
    }

    pub fn inner(&self) -> &YoungDiagram {
        &self.0.inner
    }

    pub fn skew_shape(&self) -> SkewShape {
        SkewShape::new(self.0.outer.clone(), self.0.inner.clone()).expect("valid filling")
    }

    pub fn is_straight(&self) -> bool {
        self.0.inner.is_empty()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0.rows
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// Entry at absolute cell `(i, j)`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        self.0.entry(i, j)
    }

    /// Shape formed by the cells holding entries `<= m` (straight tableaux).
    pub fn shape_of_prefix(&self, m: u32) -> YoungDiagram {
        let rows = self
            .0
            .rows
            .iter()
            .map(|r| r.partition_point(|&e| e <= m) as u32)
            .take_while(|&l| l > 0)
            .collect();
        YoungDiagram::from_canonical(rows)
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize_rows(s)
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (inner, rows) = RawFilling::deserialize(d)?.split();
        StandardTableau::new_skew(inner, rows).map_err(serde::de::Error::custom)
    }
}

/// A semistandard filling with entries in `1..=bound`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SemistandardTableau {
    filling: Filling,
    bound: u32,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<u32>>, bound: u32) -> Result<Self> {
        Self::new_skew(YoungDiagram::empty(), rows, bound)
    }

    pub fn new_skew(inner: YoungDiagram, rows: Vec<Vec<u32>>, bound: u32) -> Result<Self> {
        let f = Filling::new(inner, rows)?;
        if f.rows.iter().flatten().any(|&e| e == 0 || e > bound) {
            return Err(Error::InvalidTableau(format!("entries must lie in 1..={bound}")));
        }
        if f.rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
            return Err(Error::InvalidTableau("row not weakly increasing".into()));
        }
        if f.column_pairs().any(|(a, b)| a >= b) {
            return Err(Error::InvalidTableau("column not strictly increasing".into()));
        }
        Ok(SemistandardTableau { filling: f, bound })
    }

    pub fn empty(bound: u32) -> Self {
        SemistandardTableau {
            filling: Filling {
                inner: YoungDiagram::empty(),
                outer: YoungDiagram::empty(),
                rows: Vec::new(),
            },
            bound,
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>, bound: u32) -> Self {
        let outer = YoungDiagram::from_canonical(rows.iter().map(|r| r.len() as u32).collect());
        SemistandardTableau {
            filling: Filling {
                inner: YoungDiagram::empty(),
                outer,
                rows,
            },
            bound,
        }
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.filling.outer
    }

    pub fn inner(&self) -> &YoungDiagram {
        &self.filling.inner
    }

    pub fn is_straight(&self) -> bool {
        self.filling.inner.is_empty()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.filling.rows
    }

    pub fn size(&self) -> usize {
        self.filling.size()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        self.filling.entry(i, j)
    }

    /// Shape formed by the cells holding entries `<= m` (straight tableaux).
    pub fn shape_of_prefix(&self, m: u32) -> YoungDiagram {
        let rows = self
            .filling
            .rows
            .iter()
            .map(|r| r.partition_point(|&e| e <= m) as u32)
            .take_while(|&l| l > 0)
            .collect();
        YoungDiagram::from_canonical(rows)
    }
}

impl Serialize for SemistandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.filling.serialize_rows(s)
    }
}
