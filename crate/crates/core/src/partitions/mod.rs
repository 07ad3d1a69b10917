//! Young diagrams, skew shapes, tableaux and exact dimension counting.
//!
//! JSON encodings: a diagram is an array of row lengths, a skew shape is
//! `{"outer": [...], "inner": [...]}` and a straight tableau is an array of
//! rows of entries.

mod counting;
mod diagram;
mod enumerate;
mod tableau;

pub use counting::{count_ssyt, dim_skew_cached, dim_skew_standard, dim_standard};
pub use diagram::{contains, SkewShape, YoungDiagram};
pub use enumerate::{enumerate_ssyt, enumerate_standard, EnumerationCap};
pub use tableau::{SemistandardTableau, StandardTableau};
