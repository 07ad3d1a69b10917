use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::{SkewShape, YoungDiagram};
use crate::linalg::det_bigint;
use crate::numeric::{binomial, factorial};
use crate::{Error, Result};

/// Number of standard Young tableaux of shape `shape`, by the hook-length
/// product `n! / prod(hooks)`.
pub fn dim_standard(shape: &YoungDiagram) -> BigUint {
    let hooks = shape
        .cells()
        .fold(BigUint::one(), |acc, (i, j)| acc * shape.hook(i, j));
    factorial(shape.size()) / hooks
}

/// Number of standard fillings of a skew shape, via the Aitken determinant
/// `n! det[1 / (outer_i - inner_j - i + j)!]`.
///
/// Row `i` of the determinant is scaled by `(outer_i - i + l)!` so that every
/// entry becomes a falling factorial and the determinant is taken over the
/// integers; the scaling is divided back out exactly.
pub fn dim_skew_standard(shape: &SkewShape) -> BigUint {
    let outer = shape.outer();
    let inner = shape.inner();
    let l = outer.num_rows();
    if shape.size() == 0 {
        return BigUint::one();
    }
    let scale: Vec<i64> = (0..l).map(|i| outer.row(i) as i64 - i as i64 + l as i64 - 1).collect();
    let matrix = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let m = outer.row(i) as i64 - inner.row(j) as i64 - i as i64 + j as i64;
                    if m < 0 {
                        BigInt::zero()
                    } else {
                        // scale[i]! / m!
                        ((m + 1)..=scale[i]).fold(BigInt::one(), |acc, v| acc * v)
                    }
                })
                .collect()
        })
        .collect();
    let det = det_bigint(matrix);
    let denom = scale
        .iter()
        .fold(BigUint::one(), |acc, &s| acc * factorial(s as usize));
    let (sign, mag) = det.into_parts();
    debug_assert!(sign != Sign::Minus);
    let num = factorial(shape.size()) * mag;
    debug_assert!((&num % &denom).is_zero());
    num / denom
}

fn dim_cache() -> &'static RwLock<HashMap<SkewShape, BigUint>> {
    static CACHE: OnceLock<RwLock<HashMap<SkewShape, BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Memoised [`dim_skew_standard`]; straight shapes go through the hook formula.
pub fn dim_skew_cached(shape: &SkewShape) -> BigUint {
    if let Some(v) = dim_cache().read().expect("dim cache poisoned").get(shape) {
        return v.clone();
    }
    let v = if shape.is_straight() {
        dim_standard(shape.outer())
    } else {
        dim_skew_standard(shape)
    };
    let mut cache = dim_cache().write().expect("dim cache poisoned");
    if cache.len() > 1 << 20 {
        cache.clear();
    }
    cache.entry(shape.clone()).or_insert(v).clone()
}

/// Number of semistandard fillings of a skew shape with entries `<= k`, by the
/// Jacobi-Trudi determinant with `h_n = C(n + k - 1, n)`.
pub fn count_ssyt(shape: &SkewShape, k: u32) -> Result<BigUint> {
    if shape.size() == 0 {
        return Ok(BigUint::one());
    }
    if k == 0 {
        return Err(Error::InvalidParameter(
            "k = 0 admits no filling of a nonempty shape".into(),
        ));
    }
    let outer = shape.outer();
    let inner = shape.inner();
    let l = outer.num_rows();
    let h = |n: i64| -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            BigInt::from(binomial(n as u64 + k as u64 - 1, n as u64))
        }
    };
    let matrix = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| h(outer.row(i) as i64 - inner.row(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let (sign, mag) = det_bigint(matrix).into_parts();
    debug_assert!(sign != Sign::Minus);
    Ok(mag)
}
