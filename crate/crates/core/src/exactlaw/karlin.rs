use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linalg::{det_f64, det_rational};
use crate::numeric::{big, factorial, ln_factorial, rational_pow};
use crate::partitions::YoungDiagram;
use crate::{Error, Result};

/// Increasing (`Up`) or decreasing (`Down`) Poisson jump process.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Levels `λ_j - j`, `j = 1..=n`, of the first `n` lines (at least
/// `num_rows` of them).
pub fn diagram_levels(d: &YoungDiagram, n: usize) -> Vec<i64> {
    (0..n.max(d.num_rows())).map(|j| d.row(j) as i64 - j as i64 - 1).collect()
}

fn check_levels(from: &[i64], to: &[i64]) -> Result<()> {
    if from.len() != to.len() {
        return Err(Error::InvalidParameter(format!(
            "level sequences differ in length: {} vs {}",
            from.len(),
            to.len()
        )));
    }
    for s in [from, to] {
        if s.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameter(format!("levels not strictly decreasing: {s:?}")));
        }
    }
    Ok(())
}

fn gap(x: i64, y: i64, dir: Direction) -> Option<u64> {
    let d = match dir {
        Direction::Up => y - x,
        Direction::Down => x - y,
    };
    (d >= 0).then_some(d as u64)
}

/// `det[W_t(x_a, y_b)]` with `W_t(x, y) = t^{y-x}/(y-x)!` for `y >= x` (up) or
/// `t^{x-y}/(x-y)!` for `y <= x` (down), and zero otherwise.
pub fn km_block(levels_from: &[i64], levels_to: &[i64], t: f64, direction: Direction) -> Result<f64> {
    check_levels(levels_from, levels_to)?;
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::InvalidParameter(format!("t must be non-negative, got {t}")));
    }
    let weight = |x: i64, y: i64| match gap(x, y, direction) {
        None => 0.0,
        Some(0) => 1.0,
        Some(_) if t == 0.0 => 0.0,
        Some(d) => (d as f64 * t.ln() - ln_factorial(d)).exp(),
    };
    let m = levels_from
        .iter()
        .map(|&x| levels_to.iter().map(|&y| weight(x, y)).collect())
        .collect();
    Ok(det_f64(m))
}

pub fn km_block_exact(
    levels_from: &[i64],
    levels_to: &[i64],
    t: &BigRational,
    direction: Direction,
) -> Result<BigRational> {
    check_levels(levels_from, levels_to)?;
    if t < &BigRational::zero() {
        return Err(Error::InvalidParameter(format!("t must be non-negative, got {t}")));
    }
    let weight = |x: i64, y: i64| match gap(x, y, direction) {
        None => BigRational::zero(),
        Some(0) => BigRational::one(),
        Some(d) => rational_pow(t, d) / BigRational::from_integer(big(&factorial(d as usize))),
    };
    let m = levels_from
        .iter()
        .map(|&x| levels_to.iter().map(|&y| weight(x, y)).collect())
        .collect();
    Ok(det_rational(m))
}
