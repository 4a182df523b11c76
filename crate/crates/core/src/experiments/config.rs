use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::samplers::{parse_key_values, RegimeSpec, REGIME_KEYS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Measurement {
    ShapeDistance,
    Ell,
    Lambda1,
    Lambda2,
    CycleStats,
}

impl Measurement {
    pub const ALL: [Measurement; 5] = [
        Self::ShapeDistance,
        Self::Ell,
        Self::Lambda1,
        Self::Lambda2,
        Self::CycleStats,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::ShapeDistance => "shape_distance",
            Self::Ell => "ell",
            Self::Lambda1 => "lambda1",
            Self::Lambda2 => "lambda2",
            Self::CycleStats => "cycle_stats",
        }
    }
}

impl FromStr for Measurement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown measurement {s:?}")))
    }
}

/// Parses a comma-separated list of measurements.
pub fn parse_measurements(s: &str) -> Result<BTreeSet<Measurement>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// Parses a comma-separated list of sizes; accepts `1e5`-style literals.
pub fn parse_ladder(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            if let Ok(v) = t.parse::<usize>() {
                return Ok(v);
            }
            match t.parse::<f64>() {
                Ok(v) if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 => Ok(v as usize),
                _ => Err(Error::Parse(format!("bad size {t:?}"))),
            }
        })
        .collect()
}

/// One Monte Carlo run: a regime sampled `trials` times at each size.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub regime: RegimeSpec,
    pub n_ladder: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    pub measurements: BTreeSet<Measurement>,
    /// Trial records CSV.
    pub output: Option<PathBuf>,
    /// Summary JSON; defaults to the records path with extension `summary.json`.
    pub summary_output: Option<PathBuf>,
    /// Worker threads; 0 means one per core.
    pub workers: usize,
    /// Append a `wall_time` column (output then depends on timing).
    pub wall_time: bool,
}

const RUN_KEYS: &[&str] = &[
    "n_ladder",
    "trials",
    "seed",
    "measurements",
    "out",
    "summary",
    "workers",
    "wall_time",
];

impl ExperimentConfig {
    pub fn new(regime: RegimeSpec, n_ladder: Vec<usize>, trials: u64, seed: u64) -> Self {
        Self {
            regime,
            n_ladder,
            trials,
            seed,
            measurements: Measurement::ALL.into_iter().collect(),
            output: None,
            summary_output: None,
            workers: 0,
            wall_time: false,
        }
    }

    pub fn with_measurements(mut self, m: &[Measurement]) -> Self {
        self.measurements = m.iter().copied().collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.regime.validate()?;
        if self.trials == 0 || self.trials > u32::MAX as u64 {
            return Err(Error::InvalidParameter(format!(
                "trials = {} out of range",
                self.trials
            )));
        }
        if self.n_ladder.is_empty() {
            return Err(Error::InvalidParameter("empty n_ladder".into()));
        }
        if self.n_ladder.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("n_ladder must be strictly increasing".into()));
        }
        if self.n_ladder.iter().any(|&n| n > u32::MAX as usize) {
            return Err(Error::InvalidParameter("n above 2^32 - 1".into()));
        }
        if self.measurements.contains(&Measurement::ShapeDistance) && self.n_ladder[0] == 0 {
            return Err(Error::InvalidParameter("shape distance needs n >= 1".into()));
        }
        if self.regime == RegimeSpec::FpfInvolution {
            if let Some(n) = self.n_ladder.iter().find(|&&n| n % 2 == 1) {
                return Err(Error::Parity(format!("fpf_involution at odd n = {n}")));
            }
        }
        Ok(())
    }

    pub fn summary_path(&self) -> Option<PathBuf> {
        self.summary_output
            .clone()
            .or_else(|| self.output.as_ref().map(|p| p.with_extension("summary.json")))
    }

    /// Builds a config from `key = value` pairs: the regime keys plus
    /// `n_ladder`, `trials`, `seed`, `measurements`, `out`, `summary`,
    /// `workers` and `wall_time`.
    pub fn from_pairs(pairs: &BTreeMap<String, String>) -> Result<Self> {
        if let Some(k) = pairs
            .keys()
            .find(|k| !REGIME_KEYS.contains(&k.as_str()) && !RUN_KEYS.contains(&k.as_str()))
        {
            return Err(Error::Parse(format!("unknown config key {k}")));
        }
        let regime_pairs: BTreeMap<String, String> = pairs
            .iter()
            .filter(|(k, _)| REGIME_KEYS.contains(&k.as_str()))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let regime = RegimeSpec::from_pairs(&regime_pairs)?;
        let get = |k: &str| pairs.get(k).map(String::as_str);
        let int = |k: &str| -> Result<Option<u64>> {
            get(k)
                .map(|v| {
                    v.parse()
                        .map_err(|_| Error::Parse(format!("{k} = {v:?} is not an integer")))
                })
                .transpose()
        };
        let n_ladder =
            parse_ladder(get("n_ladder").ok_or_else(|| Error::InvalidParameter("missing key n_ladder".into()))?)?;
        let trials = int("trials")?.unwrap_or(1);
        let seed = int("seed")?.ok_or_else(|| Error::InvalidParameter("missing key seed".into()))?;
        let mut cfg = Self::new(regime, n_ladder, trials, seed);
        if let Some(m) = get("measurements") {
            cfg.measurements = parse_measurements(m)?;
        }
        cfg.output = get("out").map(PathBuf::from);
        cfg.summary_output = get("summary").map(PathBuf::from);
        cfg.workers = int("workers")?.unwrap_or(0) as usize;
        cfg.wall_time = match get("wall_time") {
            None | Some("false") => false,
            Some("true") => true,
            Some(v) => return Err(Error::Parse(format!("wall_time = {v:?}"))),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

impl FromStr for ExperimentConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_pairs(&parse_key_values(s)?)
    }
}

impl fmt::Display for ExperimentConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.regime)?;
        let ladder: Vec<String> = self.n_ladder.iter().map(ToString::to_string).collect();
        writeln!(f, "n_ladder = {}", ladder.join(","))?;
        writeln!(f, "trials = {}", self.trials)?;
        writeln!(f, "seed = {}", self.seed)?;
        let m: Vec<&str> = self.measurements.iter().map(|m| m.name()).collect();
        writeln!(f, "measurements = {}", m.join(","))?;
        if let Some(p) = &self.output {
            writeln!(f, "out = {}", p.display())?;
        }
        if let Some(p) = &self.summary_output {
            writeln!(f, "summary = {}", p.display())?;
        }
        writeln!(f, "workers = {}", self.workers)?;
        writeln!(f, "wall_time = {}", self.wall_time)
    }
}
