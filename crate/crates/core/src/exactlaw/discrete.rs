use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{ExactProbability, FddQuery, LogProbability};
use crate::numeric::{big, exact_rational, ln_biguint, ln_factorial, rational_pow};
use crate::partitions::{count_ssyt, SkewShape, YoungDiagram};
use crate::trajectories::lattice::lattice_count;
use crate::{Error, Result};

/// Largest `k` for which exact rational values are produced; the factor
/// `(1 - q)^{k²}` grows too large beyond it.
pub const EXACT_DISCRETE_MAX_K: u32 = 16;

fn check(theta: f64, k: u32) -> Result<()> {
    if !(theta.is_finite() && theta > 0.0) || k == 0 || theta >= k as f64 {
        return Err(Error::InvalidParameter(format!("need 0 < theta < k, got theta={theta}, k={k}")));
    }
    Ok(())
}

/// Number of semistandard fillings with entries from `count` values.
fn dim_l(shape: &SkewShape, count: u32) -> num_bigint::BigUint {
    if count == 0 {
        return if shape.size() == 0 { One::one() } else { Default::default() };
    }
    count_ssyt(shape, count).expect("positive bound")
}

/// Finite-dimensional law of the geometric-lattice diagram process:
/// `(1-q)^{k²} q^{|ν|} ∏ Dim_L(skew)` with `q = θ²/k²` and `L` the number of
/// lattice points in each half-open interval between consecutive pins.
pub fn fdd_discrete(query: &FddQuery) -> Result<LogProbability> {
    let k = query
        .discrete_k()
        .ok_or_else(|| Error::InvalidQuery("query has no lattice size k".into()))?;
    let theta = query.theta();
    check(theta, k)?;
    let (left, right) = query.chains();
    let mut dims = Vec::new();
    for w in left.windows(2) {
        let l = lattice_count(theta, k, theta + w[0].0, theta + w[1].0);
        dims.push(dim_l(&SkewShape::new(w[1].1.clone(), w[0].1.clone())?, l));
    }
    for w in right.windows(2) {
        let l = lattice_count(theta, k, theta - w[1].0, theta - w[0].0);
        dims.push(dim_l(&SkewShape::new(w[0].1.clone(), w[1].1.clone())?, l));
    }
    let n = query.peak().size() as u64;
    let q = (theta / k as f64).powi(2);
    let k2 = k as u64 * k as u64;
    let mut ln = k2 as f64 * (-q).ln_1p() + n as f64 * q.ln();
    for d in &dims {
        ln += ln_biguint(d);
    }
    let exact = (k <= EXACT_DISCRETE_MAX_K).then(|| {
        let th = exact_rational(theta);
        let kk = BigRational::from_integer(BigInt::from(k));
        let qe = &th * &th / (&kk * &kk);
        let mut factor = rational_pow(&(BigRational::one() - &qe), k2) * rational_pow(&qe, n);
        for d in &dims {
            factor *= BigRational::from_integer(big(d));
        }
        ExactProbability::rational(factor)
    });
    Ok(LogProbability { ln, exact })
}

/// Skew Schur value with `L(x, y)` variables set to `θ/k`:
/// `(θ/k)^{|shape|} · Dim_L(shape)`.
pub fn finite_length_schur(shape: &SkewShape, theta: f64, k: u32, x: f64, y: f64) -> Result<f64> {
    if !(theta.is_finite() && theta > 0.0) || k == 0 {
        return Err(Error::InvalidParameter(format!("need theta > 0 and k > 0, got {theta}, {k}")));
    }
    let l = lattice_count(theta, k, x, y);
    let n = shape.size() as f64;
    Ok((n * (theta / k as f64).ln() + ln_biguint(&dim_l(shape, l))).exp())
}

/// Power sum `p_λ` under the finite-length specialization on `(x, y]` and
/// under the exponential specialization of parameter `y - x`.
pub fn power_sum_diagnostic(partition: &YoungDiagram, theta: f64, k: u32, x: f64, y: f64) -> (f64, f64) {
    let l = lattice_count(theta, k, x, y) as f64;
    let n = partition.size() as i32;
    let finite = l.powi(partition.num_rows() as i32) * (theta / k as f64).powi(n);
    let single_column = partition.rows().iter().all(|&r| r == 1);
    let exponential = if single_column { (y - x).powi(n) } else { 0.0 };
    (finite, exponential)
}

/// `P(N = n)` for the total count `N` of the `k × k` geometric matrix, a sum
/// of `k²` geometric variables: `C(k² + n - 1, n) (1-q)^{k²} qⁿ`.
pub fn discrete_total_count(theta: f64, k: u32, n: u64) -> Result<LogProbability> {
    check(theta, k)?;
    let q = (theta / k as f64).powi(2);
    let k2 = k as u64 * k as u64;
    let ln_binom = ln_factorial(k2 + n - 1) - ln_factorial(n) - ln_factorial(k2 - 1);
    Ok(LogProbability::from_ln(ln_binom + k2 as f64 * (-q).ln_1p() + n as f64 * q.ln()))
}

/// `Σ_{|ν| <= max_size} P(λ(0) = ν)` for the lattice model, and a bound on the
/// omitted mass from the negative-binomial tail of the total count.
pub fn normalization_discrete(theta: f64, k: u32, max_size: usize) -> Result<(f64, f64)> {
    check(theta, k)?;
    let mut total = 0.0;
    for nu in YoungDiagram::partitions_up_to(max_size) {
        let q = FddQuery::discrete(theta, k, vec![super::Pin::new(0.0, nu)])?;
        total += fdd_discrete(&q)?.probability();
    }
    let q = (theta / k as f64).powi(2);
    let k2 = (k as u64 * k as u64) as f64;
    let m = max_size as u64 + 1;
    let pmf = discrete_total_count(theta, k, m)?.probability();
    // successive pmf ratios q (k² + n) / (n + 1) decrease towards q
    let ratio = q * (k2 + m as f64) / (m as f64 + 1.0);
    let tail = if ratio < 1.0 { pmf / (1.0 - ratio) } else { 1.0 };
    Ok((total, tail))
}
