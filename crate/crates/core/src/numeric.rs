//! Small numeric helpers shared by the counting and probability code.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `C(n, r)` as an exact integer; zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Natural log of an arbitrary-size unsigned integer. Returns `-inf` for zero.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(0.0);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of `n!`, exact summation below 256 and Stirling's series above.
pub fn ln_factorial(n: u64) -> f64 {
    if n < 256 {
        return (2..=n).map(|k| (k as f64).ln()).sum();
    }
    let x = n as f64;
    x * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI * x).ln() + 1.0 / (12.0 * x)
        - 1.0 / (360.0 * x * x * x)
}

/// Natural log of a positive rational; `-inf` for zero, `NaN` for negatives.
pub fn ln_rational(x: &BigRational) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    if x.is_negative() {
        return f64::NAN;
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    ln_biguint(num) - ln_biguint(den)
}

/// Converts a rational to `f64`, staying accurate when numerator and
/// denominator individually overflow.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    sign * ln_rational(&x.abs()).exp()
}

/// The exact dyadic rational value of a finite `f64`.
pub fn exact_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

pub fn big(n: &BigUint) -> BigInt {
    BigInt::from(n.clone())
}

/// `base^exp` for a rational base with `0^0 = 1`.
pub fn rational_pow(base: &BigRational, exp: u64) -> BigRational {
    num_traits::pow::Pow::pow(base, exp as u32)
}

/// Relative agreement of two reals to `digits` significant digits.
pub fn agree_to_digits(a: f64, b: f64, digits: i32) -> bool {
    if a == b {
        return true;
    }
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= scale * 10f64.powi(-digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials_and_binomials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn ln_helpers_match_f64() {
        let f = factorial(30);
        assert!((ln_biguint(&f) - ln_factorial(30)).abs() < 1e-10);
        let huge = factorial(400);
        assert!((ln_biguint(&huge) - ln_factorial(400)).abs() < 1e-8);
        let r = BigRational::new(BigInt::from(3), BigInt::from(8));
        assert!((rational_to_f64(&r) - 0.375).abs() < 1e-15);
    }

    #[test]
    fn stirling_branch_is_continuous() {
        let exact: f64 = (2..=300u64).map(|k| (k as f64).ln()).sum();
        assert!((ln_factorial(300) - exact).abs() < 1e-9);
    }
}
