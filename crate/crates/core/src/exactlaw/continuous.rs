use num_rational::BigRational;
use num_traits::{One, Zero};

use super::karlin::{diagram_levels, km_block, Direction};
use super::{ExactProbability, FddQuery, LogProbability};
use crate::numeric::{big, exact_rational, factorial, ln_biguint, ln_factorial, rational_pow};
use crate::partitions::{dim_skew_cached, dim_standard, SkewShape, YoungDiagram};
use crate::{Error, Result};

fn check_param(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be non-negative, got {v}")))
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("theta must be positive, got {theta}")))
    }
}

/// Skew Schur function under the exponential specialization of parameter `t`:
/// `dim(λ/μ) tⁿ / n!` with `n = |λ/μ|`.
pub fn plancherel_schur(shape: &SkewShape, t: f64) -> Result<f64> {
    check_param("t", t)?;
    Ok(ln_plancherel_schur(shape, t).exp())
}

pub fn plancherel_schur_exact(shape: &SkewShape, t: &BigRational) -> Result<BigRational> {
    if t < &BigRational::zero() {
        return Err(Error::InvalidParameter(format!("t must be non-negative, got {t}")));
    }
    let n = shape.size();
    let dim = BigRational::from_integer(big(&dim_skew_cached(shape)));
    Ok(dim * rational_pow(t, n as u64) / BigRational::from_integer(big(&factorial(n))))
}

fn ln_plancherel_schur(shape: &SkewShape, t: f64) -> f64 {
    let n = shape.size();
    if n == 0 {
        return 0.0;
    }
    if t == 0.0 {
        return f64::NEG_INFINITY;
    }
    ln_biguint(&dim_skew_cached(shape)) + n as f64 * t.ln() - ln_factorial(n as u64)
}

/// `e^{-θ²} (θ^{|λ|} dim λ / |λ|!)²`.
pub fn poissonized_plancherel(shape: &YoungDiagram, theta: f64) -> Result<LogProbability> {
    check_theta(theta)?;
    let th = exact_rational(theta);
    Ok(plancherel_with_square(shape, theta * theta, th.clone() * th))
}

/// Poissonized Plancherel measure written in terms of the squared parameter
/// `s`, exact value `s^n dim² / (n!)² · e^{-s}`.
fn plancherel_with_square(shape: &YoungDiagram, s: f64, s_exact: BigRational) -> LogProbability {
    let n = shape.size();
    let dim = dim_standard(shape);
    let ln = if n == 0 {
        -s
    } else if s == 0.0 {
        f64::NEG_INFINITY
    } else {
        -s + n as f64 * s.ln() + 2.0 * (ln_biguint(&dim) - ln_factorial(n as u64))
    };
    let d = BigRational::from_integer(big(&dim));
    let nf = BigRational::from_integer(big(&factorial(n)));
    let factor = rational_pow(&s_exact, n as u64) * &d * &d / (&nf * &nf);
    LogProbability { ln, exact: Some(ExactProbability { factor, exp_neg: s_exact }) }
}

/// Law of `λ(t)`: Poissonized Plancherel with squared parameter `θ(θ − |t|)`.
pub fn marginal_continuous(shape: &YoungDiagram, t: f64, theta: f64) -> Result<LogProbability> {
    check_theta(theta)?;
    crate::trajectories::check_time(t, theta)?;
    let th = exact_rational(theta);
    let s_exact = &th * (&th - exact_rational(t.abs()));
    Ok(plancherel_with_square(shape, theta * (theta - t.abs()), s_exact))
}

struct Step {
    dt: f64,
    dt_exact: BigRational,
    skew: SkewShape,
}

fn steps(query: &FddQuery) -> Result<Vec<Step>> {
    let (left, right) = query.chains();
    let mut out = Vec::new();
    for w in left.windows(2) {
        out.push(Step {
            dt: w[1].0 - w[0].0,
            dt_exact: exact_rational(w[1].0) - exact_rational(w[0].0),
            skew: SkewShape::new(w[1].1.clone(), w[0].1.clone())?,
        });
    }
    for w in right.windows(2) {
        out.push(Step {
            dt: w[1].0 - w[0].0,
            dt_exact: exact_rational(w[1].0) - exact_rational(w[0].0),
            skew: SkewShape::new(w[0].1.clone(), w[1].1.clone())?,
        });
    }
    Ok(out)
}

fn require_continuous(query: &FddQuery) -> Result<()> {
    if query.discrete_k().is_some() {
        return Err(Error::InvalidQuery("query is for the discrete model".into()));
    }
    Ok(())
}

/// Finite-dimensional law of the Poissonized RS diagram process:
/// `e^{-θ²} ∏ dim(skew) Δt^{|skew|} / |skew|!` over consecutive pins on each
/// side of `0`, with `∅` at `±θ`.
pub fn fdd_continuous(query: &FddQuery) -> Result<LogProbability> {
    require_continuous(query)?;
    let theta = query.theta();
    let steps = steps(query)?;
    let mut ln = -theta * theta;
    let mut factor = BigRational::one();
    for s in &steps {
        ln += ln_plancherel_schur(&s.skew, s.dt);
        factor *= plancherel_schur_exact(&s.skew, &s.dt_exact)?;
    }
    let th = exact_rational(theta);
    let exact = ExactProbability { factor, exp_neg: &th * &th };
    if steps.iter().map(|s| s.skew.size()).max().unwrap_or(0) <= 12 && ln > -600.0 {
        debug_assert!(
            crate::numeric::agree_to_digits(ln.exp(), fdd_continuous_schur_form(query)?, 8),
            "dimension form and determinant form disagree for {query:?}"
        );
    }
    Ok(LogProbability { ln, exact: Some(exact) })
}

/// The same law written as `e^{-θ²}` times a product of skew Schur values,
/// each computed from its Jacobi-Trudi determinant in floating point.
pub fn fdd_continuous_schur_form(query: &FddQuery) -> Result<f64> {
    require_continuous(query)?;
    let theta = query.theta();
    let mut p = (-theta * theta).exp();
    for s in steps(query)? {
        let n = s.skew.outer().num_rows();
        let from = diagram_levels(s.skew.inner(), n);
        let to = diagram_levels(s.skew.outer(), n);
        p *= km_block(&from, &to, s.dt, Direction::Up)?;
    }
    Ok(p)
}

/// Upper bound on `P(X > n)` for `X ~ Poisson(mean)`.
pub fn poisson_tail_bound(mean: f64, n: usize) -> f64 {
    let m = n as f64 + 1.0;
    let pmf = (-mean + m * mean.ln() - ln_factorial(n as u64 + 1)).exp();
    let ratio = mean / (m + 1.0);
    if ratio < 1.0 {
        pmf / (1.0 - ratio)
    } else {
        1.0
    }
}

/// `Σ_{|λ| <= max_size} P(λ(0) = λ)` together with a bound on the omitted mass.
pub fn normalization_continuous(theta: f64, max_size: usize) -> Result<(f64, f64)> {
    let mut total = 0.0;
    for d in YoungDiagram::partitions_up_to(max_size) {
        total += poissonized_plancherel(&d, theta)?.probability();
    }
    Ok((total, poisson_tail_bound(theta * theta, max_size)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlaw::Pin;
    use num_bigint::BigInt;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn d(r: &[u32]) -> YoungDiagram {
        YoungDiagram::new(r.to_vec()).unwrap()
    }

    fn q(pins: &[(f64, &[u32])]) -> FddQuery {
        FddQuery::continuous(1.0, pins.iter().map(|&(t, r)| Pin::new(t, d(r))).collect()).unwrap()
    }

    #[test]
    fn schur_examples() {
        let s = SkewShape::straight(d(&[2, 1]));
        assert!((plancherel_schur(&s, 2.0).unwrap() - 8.0 / 3.0).abs() < 1e-14);
        assert_eq!(plancherel_schur_exact(&s, &rational(2, 1)).unwrap(), rational(8, 3));
        let id = SkewShape::new(d(&[3, 1]), d(&[3, 1])).unwrap();
        assert_eq!(plancherel_schur(&id, 0.7).unwrap(), 1.0);
        assert!(plancherel_schur(&id, -1.0).is_err());
        assert!((plancherel_schur(&SkewShape::straight(d(&[1])), 0.3).unwrap() - 0.3).abs() < 1e-16);
    }

    #[test]
    fn plancherel_examples() {
        let e1 = (-1f64).exp();
        assert!((poissonized_plancherel(&d(&[]), 1.0).unwrap().probability() - e1).abs() < 1e-16);
        assert!((poissonized_plancherel(&d(&[1]), 1.0).unwrap().probability() - e1).abs() < 1e-16);
        let (total, tail) = normalization_continuous(1.0, 20).unwrap();
        assert!((total - 1.0).abs() < 1e-10 + tail);
    }

    #[test]
    fn fdd_worked_examples() {
        let e1 = (-1f64).exp();
        let p = fdd_continuous(&q(&[(0.0, &[1])])).unwrap();
        assert!((p.probability() - e1).abs() < 1e-15);
        let p = fdd_continuous(&q(&[(-0.5, &[1]), (0.0, &[1])])).unwrap();
        assert!((p.probability() - 0.5 * e1).abs() < 1e-15);
        assert_eq!(p.exact.unwrap().factor, rational(1, 2));
        let p = fdd_continuous(&q(&[(-0.5, &[1]), (0.0, &[1]), (0.5, &[1])])).unwrap();
        assert!((p.probability() - 0.25 * e1).abs() < 1e-15);
    }

    #[test]
    fn pins_at_the_boundary() {
        assert!(fdd_continuous(&q(&[(-1.0, &[1]), (0.0, &[1])])).unwrap().is_zero());
        let a = fdd_continuous(&q(&[(-1.0, &[]), (0.0, &[1]), (1.0, &[])])).unwrap();
        let b = fdd_continuous(&q(&[(0.0, &[1])])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn marginal_edges() {
        let m = marginal_continuous(&d(&[]), 1.0, 1.0).unwrap();
        assert_eq!(m.probability(), 1.0);
        assert!(marginal_continuous(&d(&[1]), -1.0, 1.0).unwrap().is_zero());
        let a = marginal_continuous(&d(&[2, 1]), 0.0, 1.3).unwrap();
        let b = poissonized_plancherel(&d(&[2, 1]), 1.3).unwrap();
        assert!((a.ln - b.ln).abs() < 1e-14);
        assert!(marginal_continuous(&d(&[]), 1.5, 1.0).is_err());
    }

    #[test]
    fn exact_agrees_with_log_form() {
        let p = fdd_continuous(&q(&[(-0.75, &[1]), (-0.25, &[2, 1]), (0.0, &[3, 1]), (0.5, &[2])])).unwrap();
        let e = p.exact.as_ref().unwrap();
        assert!(crate::numeric::agree_to_digits(p.ln, e.ln(), 12));
        assert!(crate::numeric::agree_to_digits(
            p.probability(),
            fdd_continuous_schur_form(&q(&[(-0.75, &[1]), (-0.25, &[2, 1]), (0.0, &[3, 1]), (0.5, &[2])]))
                .unwrap(),
            12
        ));
    }
}
