use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

use crate::numeric::{ln_rational, rational_to_f64};

/// Exact value `factor · exp(-exp_neg)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactProbability {
    pub factor: BigRational,
    pub exp_neg: BigRational,
}

impl ExactProbability {
    pub fn rational(factor: BigRational) -> Self {
        ExactProbability { factor, exp_neg: BigRational::zero() }
    }

    pub fn ln(&self) -> f64 {
        ln_rational(&self.factor) - rational_to_f64(&self.exp_neg)
    }

    pub fn to_f64(&self) -> f64 {
        self.ln().exp()
    }

    /// The value itself when it is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.exp_neg.is_zero() || self.factor.is_zero()).then_some(&self.factor)
    }
}

impl fmt::Display for ExactProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{r}")
        } else if self.factor.is_one() {
            write!(f, "exp(-{})", self.exp_neg)
        } else {
            write!(f, "{} * exp(-{})", self.factor, self.exp_neg)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LogProbability {
    pub ln: f64,
    pub exact: Option<ExactProbability>,
}

impl LogProbability {
    pub fn zero() -> Self {
        LogProbability { ln: f64::NEG_INFINITY, exact: Some(ExactProbability::rational(BigRational::zero())) }
    }

    pub fn from_ln(ln: f64) -> Self {
        LogProbability { ln, exact: None }
    }

    pub fn probability(&self) -> f64 {
        self.ln.exp()
    }

    pub fn is_zero(&self) -> bool {
        self.ln == f64::NEG_INFINITY
    }
}

impl Serialize for LogProbability {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LogProbability", 3)?;
        st.serialize_field("log_probability", &(!self.is_zero()).then_some(self.ln))?;
        st.serialize_field("probability", &self.probability())?;
        st.serialize_field("exact", &self.exact.as_ref().map(|e| e.to_string()))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn display_and_value() {
        let e = ExactProbability {
            factor: BigRational::new(BigInt::from(1), BigInt::from(2)),
            exp_neg: BigRational::one(),
        };
        assert_eq!(e.to_string(), "1/2 * exp(-1)");
        assert!((e.to_f64() - 0.5 * (-1f64).exp()).abs() < 1e-16);
        assert!(e.as_rational().is_none());
        assert_eq!(ExactProbability::rational(BigRational::one()).to_string(), "1");
        let z = LogProbability::zero();
        assert!(z.is_zero());
        assert_eq!(z.probability(), 0.0);
        let js = serde_json::to_value(&z).unwrap();
        assert!(js["log_probability"].is_null());
    }
}
