//! Rescaled statistics whose limits are Tracy–Widom laws or constants.

use std::fmt;
use std::str::FromStr;

use super::record::TrialRecord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RescaleMode {
    /// `(ℓ - 2√(n-m)) / (n-m)^{1/6}`, β = 2 class.
    Tw2,
    /// `(ℓ - 2√n) / n^{1/6}`, β = 1 class.
    Tw1,
    /// `(λ_1 - 2√n) / n^{1/6}`, β = 4 class.
    Tw4,
    /// `ℓ / √(n-m)`, tends to 2.
    Lln,
    /// `λ_1 ln n / (θ n)`, tends to 1 when `m ~ θ n / ln n`.
    FirstRowLog { theta: f64 },
}

fn field(v: Option<usize>, name: &str) -> Result<f64> {
    v.map(|x| x as f64)
        .ok_or_else(|| Error::InvalidParameter(format!("record has no {name}")))
}

fn core_size(r: &TrialRecord) -> Result<f64> {
    let core = r.n.saturating_sub(r.fix_count);
    if core == 0 {
        return Err(Error::DivisionByZero(format!(
            "n = m = {} leaves no non-fixed points",
            r.n
        )));
    }
    Ok(core as f64)
}

fn positive_n(r: &TrialRecord) -> Result<f64> {
    if r.n == 0 {
        return Err(Error::DivisionByZero("n = 0".into()));
    }
    Ok(r.n as f64)
}

/// The rescaled statistic of one trial, using its measured fixed-point count.
pub fn rescale_statistic(r: &TrialRecord, mode: RescaleMode) -> Result<f64> {
    match mode {
        RescaleMode::Tw2 => {
            let core = core_size(r)?;
            Ok((field(r.ell, "ell")? - 2.0 * core.sqrt()) / core.powf(1.0 / 6.0))
        }
        RescaleMode::Tw1 => {
            let n = positive_n(r)?;
            Ok((field(r.ell, "ell")? - 2.0 * n.sqrt()) / n.powf(1.0 / 6.0))
        }
        RescaleMode::Tw4 => {
            let n = positive_n(r)?;
            Ok((field(r.lambda1, "lambda1")? - 2.0 * n.sqrt()) / n.powf(1.0 / 6.0))
        }
        RescaleMode::Lln => Ok(field(r.ell, "ell")? / core_size(r)?.sqrt()),
        RescaleMode::FirstRowLog { theta } => {
            let n = positive_n(r)?;
            if r.n == 1 {
                return Err(Error::DivisionByZero("ln 1 = 0".into()));
            }
            if theta.is_nan() || theta <= 0.0 {
                return Err(Error::InvalidParameter(format!("theta = {theta}")));
            }
            Ok(field(r.lambda1, "lambda1")? * n.ln() / (theta * n))
        }
    }
}

/// Fraction of records with `2 - ε < λ_2/√n < 4 + ε`, over records that
/// measured `λ_2`. Returns 0 when there are none.
pub fn lambda2_window(records: &[TrialRecord], eps: f64) -> f64 {
    let measured: Vec<f64> = records
        .iter()
        .filter_map(|r| r.lambda2.map(|l2| l2 as f64 / (r.n as f64).sqrt()))
        .collect();
    if measured.is_empty() {
        return 0.0;
    }
    let inside = measured.iter().filter(|&&x| 2.0 - eps < x && x < 4.0 + eps).count();
    inside as f64 / measured.len() as f64
}

impl fmt::Display for RescaleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Tw2 => f.write_str("tw2"),
            Self::Tw1 => f.write_str("tw1"),
            Self::Tw4 => f.write_str("tw4"),
            Self::Lln => f.write_str("lln"),
            Self::FirstRowLog { theta } => write!(f, "corW_l1:{theta}"),
        }
    }
}

impl FromStr for RescaleMode {
    type Err = Error;

    /// `tw2`, `tw1`, `tw4`, `lln`, or `corW_l1[:θ]` (θ defaults to 1).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tw2" => Ok(Self::Tw2),
            "tw1" => Ok(Self::Tw1),
            "tw4" => Ok(Self::Tw4),
            "lln" => Ok(Self::Lln),
            "corW_l1" => Ok(Self::FirstRowLog { theta: 1.0 }),
            other => match other.strip_prefix("corW_l1:") {
                Some(t) => t
                    .parse()
                    .map(|theta| Self::FirstRowLog { theta })
                    .map_err(|_| Error::Parse(format!("bad theta in {other:?}"))),
                None => Err(Error::Parse(format!("unknown rescale mode {other:?}"))),
            },
        }
    }
}
