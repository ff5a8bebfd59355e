use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::bounds::BoundId;
use crate::catalog::MAX_EXHAUSTIVE_N;
use crate::invariants::ORACLE_MAX_N;
use crate::respectful::DEFAULT_R;

use super::HarnessError;

/// Where the graphs of a sweep come from.
#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    /// graph6 file, one graph per line.
    Graph6File(PathBuf),
    /// graph6 lines on standard input.
    Stdin,
    /// graph6 lines supplied in memory.
    Lines(Vec<String>),
    /// Every graph on `0..=n` vertices, one per isomorphism class.
    Exhaustive(usize),
    /// Uniform random labeled graphs.
    Random { n: usize, p: f64, seed: u64, count: usize },
}

impl fmt::Display for InputSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputSource::Graph6File(p) => write!(f, "graph6:{}", p.display()),
            InputSource::Stdin => write!(f, "graph6:-"),
            InputSource::Lines(l) => write!(f, "graph6:inline({} lines)", l.len()),
            InputSource::Exhaustive(n) => write!(f, "exhaustive:n<={n}"),
            InputSource::Random { n, p, seed, count } => {
                write!(f, "random:n={n},p={p},seed={seed},count={count}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub input: InputSource,
    pub bounds: Vec<BoundId>,
    /// Minimum class order for the respectful greedy search.
    pub r: usize,
    /// Worker threads; 0 lets the pool decide. Never affects the report.
    pub jobs: usize,
    /// Largest order for which stinginess and the exhaustive searches run.
    pub max_enum_n: usize,
    /// Tight witnesses kept per bound.
    pub tight_cap: usize,
    /// Include wall-clock time in the report (breaks byte-for-byte
    /// reproducibility).
    pub record_timing: bool,
    /// Echo violations to standard error as they are found.
    pub echo_violations: bool,
}

impl SweepConfig {
    pub fn new(input: InputSource) -> Self {
        SweepConfig {
            input,
            bounds: BoundId::ALL.to_vec(),
            r: DEFAULT_R,
            jobs: 0,
            max_enum_n: ORACLE_MAX_N,
            tight_cap: 20,
            record_timing: false,
            echo_violations: false,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |msg: String| Err(HarnessError::Config(msg));
        if self.bounds.is_empty() {
            return bad("no bounds selected".into());
        }
        if self.r == 0 {
            return bad("--r must be at least 1".into());
        }
        if self.max_enum_n > ORACLE_MAX_N {
            return bad(format!("--max-enum-n may not exceed {ORACLE_MAX_N}"));
        }
        match self.input {
            InputSource::Exhaustive(n) => {
                if n > MAX_EXHAUSTIVE_N {
                    return bad(format!("--exhaustive supports n <= {MAX_EXHAUSTIVE_N}"));
                }
                if n > self.max_enum_n {
                    return bad(format!("--exhaustive {n} exceeds --max-enum-n {}", self.max_enum_n));
                }
            }
            InputSource::Random { n, p, .. } => {
                if !(0.0..=1.0).contains(&p) {
                    return bad(format!("edge probability {p} outside [0, 1]"));
                }
                if n == 0 || n > self.max_enum_n {
                    return bad(format!("--random n must be in 1..={}", self.max_enum_n));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// The parts of the configuration that determine the report.
    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            input: self.input.to_string(),
            bounds: self.bounds.clone(),
            r: self.r,
            max_enum_n: self.max_enum_n,
            tight_cap: self.tight_cap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub input: String,
    pub bounds: Vec<BoundId>,
    pub r: usize,
    pub max_enum_n: usize,
    pub tight_cap: usize,
}
