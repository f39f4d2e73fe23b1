//! Compaction parameters and verification levels.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParamError {
    #[error("c must be at least 10, got {0}")]
    SmallC(usize),
    #[error("d must exceed 1000, got {0}")]
    SmallD(usize),
    #[error("delta must lie in (0, 1/((2c+1)d)) = (0, {bound}), got {delta}")]
    BadDelta { delta: f64, bound: f64 },
    #[error("n0 must be positive")]
    ZeroN0,
}

/// Parameters of the compactor. `epsilon` and `big_delta` are derived from
/// the others: epsilon = (2c+1) delta and big_delta = ceil(1/epsilon) + 6.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct CompactorParams {
    pub c: usize,
    pub d: usize,
    pub delta: f64,
    pub epsilon: f64,
    pub big_delta: usize,
    pub n0: usize,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
struct RawParams {
    c: usize,
    d: usize,
    delta: f64,
    n0: usize,
    #[serde(default, skip_deserializing)]
    epsilon: f64,
    #[serde(default, skip_deserializing)]
    big_delta: usize,
}

impl TryFrom<RawParams> for CompactorParams {
    type Error = ParamError;
    fn try_from(r: RawParams) -> Result<Self, ParamError> {
        CompactorParams::new(r.c, r.d, r.delta, r.n0)
    }
}

impl From<CompactorParams> for RawParams {
    fn from(p: CompactorParams) -> Self {
        RawParams { c: p.c, d: p.d, delta: p.delta, n0: p.n0, epsilon: p.epsilon, big_delta: p.big_delta }
    }
}

impl CompactorParams {
    pub fn new(c: usize, d: usize, delta: f64, n0: usize) -> Result<Self, ParamError> {
        if c < 10 {
            return Err(ParamError::SmallC(c));
        }
        if d <= 1000 {
            return Err(ParamError::SmallD(d));
        }
        let bound = 1.0 / ((2 * c + 1) as f64 * d as f64);
        if !(delta > 0.0 && delta < bound) {
            return Err(ParamError::BadDelta { delta, bound });
        }
        if n0 == 0 {
            return Err(ParamError::ZeroN0);
        }
        let epsilon = (2 * c + 1) as f64 * delta;
        let big_delta = (1.0 / epsilon).ceil() as usize + 6;
        Ok(CompactorParams { c, d, delta, epsilon, big_delta, n0 })
    }

    /// The default delta for given `c` and `d`: half the upper bound.
    pub fn default_delta(c: usize, d: usize) -> f64 {
        1.0 / ((2 * c + 1) as f64 * 2.0 * d as f64)
    }

    pub fn with_n0(self, n0: usize) -> Result<Self, ParamError> {
        CompactorParams::new(self.c, self.d, self.delta, n0)
    }

    /// Largest interior, in vertices, searched for gadgets.
    pub fn region_limit(&self) -> usize {
        (1.0 / self.epsilon).floor() as usize
    }

    /// Payload size a step is expected to reach on a graph of this size.
    pub fn target(&self, n: usize, m: usize) -> f64 {
        self.delta * (n + m) as f64
    }
}

impl Default for CompactorParams {
    fn default() -> Self {
        CompactorParams::new(10, 1024, Self::default_delta(10, 1024), 5000).expect("defaults are valid")
    }
}

/// How much checking the producer does on its own output.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyLevel {
    /// No transcript.
    #[default]
    Off,
    /// Structural side conditions and 3-connectivity of the result.
    Debug,
    /// Everything in `Debug` plus a flow check for every deleted element.
    Full,
}

impl std::str::FromStr for VerifyLevel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "off" => Ok(VerifyLevel::Off),
            "debug" => Ok(VerifyLevel::Debug),
            "full" => Ok(VerifyLevel::Full),
            _ => Err(format!("unknown verify level `{s}`")),
        }
    }
}
