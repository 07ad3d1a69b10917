use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

use super::{estimate_fdd_batch, registry, CheckContext, CheckOutcome, Model, VerificationReport};
use crate::exactlaw::{FddQuery, Pin};
use crate::sampling::RngSpec;
use crate::{Error, Result};

fn default_seed() -> u64 {
    CheckContext::default().seed
}

fn default_scale() -> f64 {
    1.0
}

fn default_threshold() -> f64 {
    super::DEFAULT_THRESHOLD
}

/// Top-level `verify` configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub stream: u64,
    #[serde(default = "default_scale")]
    pub sample_scale: f64,
    #[serde(default = "default_threshold")]
    pub threshold: f64,
    /// Report file; also the directory for rendered artifacts.
    #[serde(default)]
    pub out: Option<PathBuf>,
    /// Registry ids to run; all when absent.
    #[serde(default)]
    pub checks: Option<Vec<String>>,
    #[serde(default)]
    pub experiments: Vec<ExperimentConfig>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: default_seed(),
            stream: 0,
            sample_scale: 1.0,
            threshold: default_threshold(),
            out: None,
            checks: None,
            experiments: Vec::new(),
        }
    }
}

/// One user-defined finite-dimensional frequency check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub name: String,
    pub model: ModelKind,
    pub theta: f64,
    /// Lattice size, required for the discrete model only.
    #[serde(default)]
    pub k: Option<u32>,
    pub pins: Vec<Pin>,
    pub samples: u64,
    #[serde(default)]
    pub rng: Option<RngSpec>,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Continuous,
    Discrete,
}

impl ExperimentConfig {
    pub fn query(&self) -> Result<FddQuery> {
        let err = |m: String| Error::Config(format!("experiment {:?}: {m}", self.name));
        let k = match (self.model, self.k) {
            (ModelKind::Continuous, None) => None,
            (ModelKind::Discrete, Some(k)) => Some(k),
            (ModelKind::Continuous, Some(_)) => return Err(err("k is only valid for the discrete model".into())),
            (ModelKind::Discrete, None) => return Err(err("the discrete model needs k".into())),
        };
        FddQuery::new(self.theta, self.pins.clone(), k).map_err(|e| err(e.to_string()))
    }

    pub fn model(&self) -> Model {
        match self.k {
            Some(k) if self.model == ModelKind::Discrete => Model::Discrete { k },
            _ => Model::Continuous,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.sample_scale.is_finite() && self.sample_scale > 0.0) {
            return Err(Error::Config(format!("sample_scale must be positive, got {}", self.sample_scale)));
        }
        if !(self.threshold.is_finite() && self.threshold > 0.0) {
            return Err(Error::Config(format!("threshold must be positive, got {}", self.threshold)));
        }
        if let Some(ids) = &self.checks {
            let known: Vec<&str> = registry().iter().map(|c| c.id).collect();
            if let Some(bad) = ids.iter().find(|id| !known.contains(&id.as_str())) {
                return Err(Error::Config(format!("unknown check {bad:?}; known: {}", known.join(", "))));
            }
        }
        for e in &self.experiments {
            e.query()?;
            if e.samples == 0 {
                return Err(Error::Config(format!("experiment {:?}: samples must be positive", e.name)));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: SuiteConfig = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub version: String,
    pub seed: u64,
    pub stream: u64,
    pub sample_scale: f64,
    pub threshold: f64,
    pub checks: Vec<CheckOutcome>,
    pub experiments: Vec<VerificationReport>,
    pub passed: bool,
}

/// Reads a JSON [`SuiteConfig`] and runs it. Schema problems surface as
/// [`Error::Config`].
pub fn run_suite(config_path: &Path) -> Result<SuiteOutcome> {
    let text = std::fs::read_to_string(config_path)?;
    run_suite_config(&SuiteConfig::from_json(&text)?)
}

pub fn run_suite_config(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let ctx = CheckContext {
        seed: config.seed,
        stream: config.stream,
        sample_scale: config.sample_scale,
        threshold: config.threshold,
        out_dir: config.out.as_ref().and_then(|p| p.parent()).map(Path::to_path_buf),
    };
    let selected = |id: &str| config.checks.as_ref().map_or(true, |ids| ids.iter().any(|x| x == id));
    let checks: Vec<CheckOutcome> = registry().iter().filter(|c| selected(c.id)).map(|c| c.run(&ctx)).collect();

    let base = RngSpec::new(config.seed, config.stream);
    let mut experiments = Vec::new();
    for (i, e) in config.experiments.iter().enumerate() {
        let rng = e.rng.unwrap_or_else(|| base.substream(1000 + i as u64));
        let mut report = estimate_fdd_batch(&[e.query()?], e.samples, rng, config.threshold)?.remove(0);
        report.name = e.name.clone();
        if let Some(path) = &e.output {
            std::fs::write(path, serde_json::to_string_pretty(&report)?)?;
        }
        experiments.push(report);
    }

    let passed = checks.iter().all(|c| c.passed) && experiments.iter().all(|r| r.pass);
    let outcome = SuiteOutcome {
        version: super::code_version().to_string(),
        seed: config.seed,
        stream: config.stream,
        sample_scale: config.sample_scale,
        threshold: config.threshold,
        checks,
        experiments,
        passed,
    };
    if let Some(path) = &config.out {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, serde_json::to_string_pretty(&outcome)?)?;
    }
    Ok(outcome)
}
