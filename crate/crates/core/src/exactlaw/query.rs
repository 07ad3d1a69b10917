use serde::{Deserialize, Serialize};

use crate::partitions::YoungDiagram;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Pin {
    pub time: f64,
    pub diagram: YoungDiagram,
}

impl Pin {
    pub fn new(time: f64, diagram: YoungDiagram) -> Self {
        Pin { time, diagram }
    }
}

/// Event `{λ(t_i) = pins_i for all i}`. Times are strictly increasing and
/// include `0`; diagrams grow up to time `0` and shrink afterwards.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawQuery")]
pub struct FddQuery {
    theta: f64,
    pins: Vec<Pin>,
    #[serde(rename = "k", skip_serializing_if = "Option::is_none")]
    discrete_k: Option<u32>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuery {
    theta: f64,
    pins: Vec<Pin>,
    #[serde(default, alias = "discrete_k")]
    k: Option<u32>,
}

impl TryFrom<RawQuery> for FddQuery {
    type Error = Error;
    fn try_from(r: RawQuery) -> Result<Self> {
        FddQuery::new(r.theta, r.pins, r.k)
    }
}

impl FddQuery {
    pub fn new(theta: f64, pins: Vec<Pin>, discrete_k: Option<u32>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidQuery(m));
        if !(theta.is_finite() && theta > 0.0) {
            return bad(format!("theta must be positive, got {theta}"));
        }
        if discrete_k == Some(0) {
            return bad("k must be positive".into());
        }
        for p in &pins {
            if !(p.time >= -theta && p.time <= theta) {
                return bad(format!("pin time {} outside [-{theta}, {theta}]", p.time));
            }
        }
        if pins.windows(2).any(|w| w[0].time >= w[1].time) {
            return bad("pin times must be strictly increasing".into());
        }
        let Some(zero) = pins.iter().position(|p| p.time == 0.0) else {
            return bad("a pin at time 0 is required".into());
        };
        for w in pins[..=zero].windows(2) {
            if !w[1].diagram.contains(&w[0].diagram) {
                return Err(containment(&w[1].diagram, &w[0].diagram));
            }
        }
        for w in pins[zero..].windows(2) {
            if !w[0].diagram.contains(&w[1].diagram) {
                return Err(containment(&w[0].diagram, &w[1].diagram));
            }
        }
        Ok(FddQuery { theta, pins, discrete_k })
    }

    pub fn continuous(theta: f64, pins: Vec<Pin>) -> Result<Self> {
        FddQuery::new(theta, pins, None)
    }

    pub fn discrete(theta: f64, k: u32, pins: Vec<Pin>) -> Result<Self> {
        FddQuery::new(theta, pins, Some(k))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn pins(&self) -> &[Pin] {
        &self.pins
    }

    pub fn discrete_k(&self) -> Option<u32> {
        self.discrete_k
    }

    /// The diagram pinned at time 0.
    pub fn peak(&self) -> &YoungDiagram {
        &self.pins.iter().find(|p| p.time == 0.0).expect("validated").diagram
    }

    /// Pinned times with `∅` added at `±θ`, split at time `0` into the
    /// growing and shrinking chains (both include the time-0 pin).
    pub(crate) fn chains(&self) -> (Vec<(f64, &YoungDiagram)>, Vec<(f64, &YoungDiagram)>) {
        static EMPTY: std::sync::OnceLock<YoungDiagram> = std::sync::OnceLock::new();
        let empty = EMPTY.get_or_init(YoungDiagram::empty);
        let zero = self.pins.iter().position(|p| p.time == 0.0).expect("validated");
        let mut left = vec![(-self.theta, empty)];
        left.extend(self.pins[..=zero].iter().map(|p| (p.time, &p.diagram)));
        let mut right: Vec<(f64, &YoungDiagram)> =
            self.pins[zero..].iter().map(|p| (p.time, &p.diagram)).collect();
        right.push((self.theta, empty));
        (left, right)
    }
}

fn containment(outer: &YoungDiagram, inner: &YoungDiagram) -> Error {
    Error::NotContained { outer: outer.rows().to_vec(), inner: inner.rows().to_vec() }
}
