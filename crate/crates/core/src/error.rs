use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rows are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("inner diagram {inner:?} is not contained in outer diagram {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape mismatch between tableaux: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid point configuration: {0}")]
    InvalidConfiguration(String),

    #[error("duplicate {axis}-coordinate {value}")]
    DuplicateCoordinate { axis: char, value: f64 },

    #[error("invalid decorated pair: {0}")]
    InvalidPair(String),

    #[error("time {t} outside [-{theta}, {theta}]")]
    TimeOutOfRange { t: f64, theta: f64 },

    #[error("enumeration cap exceeded: {what} = {value} > {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("rejection sampler exhausted {0} attempts")]
    AttemptsExhausted(u64),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
