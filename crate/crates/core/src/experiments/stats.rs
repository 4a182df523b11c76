//! Order-independent summaries: every reduction runs over sorted values, so
//! shuffling the input records leaves the output bit-for-bit unchanged.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::record::{TrialRecord, SCHEMA_VERSION};
use super::rescale::{rescale_statistic, RescaleMode};

/// Probabilities of the reported quantiles.
pub const QUANTILE_LEVELS: [f64; 5] = [0.05, 0.25, 0.5, 0.75, 0.95];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatSummary {
    pub n: usize,
    pub statistic: String,
    pub count: usize,
    pub mean: f64,
    /// Sample standard deviation (`n - 1` denominator; 0 for one value).
    pub sd: f64,
    pub q05: f64,
    pub q25: f64,
    pub q50: f64,
    pub q75: f64,
    pub q95: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub schema_version: u32,
    pub entries: Vec<StatSummary>,
}

impl SummaryStats {
    pub fn get(&self, n: usize, statistic: &str) -> Option<&StatSummary> {
        self.entries.iter().find(|e| e.n == n && e.statistic == statistic)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Linear interpolation between order statistics (Hyndman–Fan type 7).
pub fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Summary of one sample. `None` for an empty sample.
pub fn summarize(n: usize, statistic: &str, values: &[f64]) -> Option<StatSummary> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let count = v.len();
    let mean = v.iter().sum::<f64>() / count as f64;
    let sd = if count > 1 {
        (v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (count - 1) as f64).sqrt()
    } else {
        0.0
    };
    let q = QUANTILE_LEVELS.map(|level| quantile_sorted(&v, level));
    Some(StatSummary {
        n,
        statistic: statistic.to_string(),
        count,
        mean,
        sd,
        q05: q[0],
        q25: q[1],
        q50: q[2],
        q75: q[3],
        q95: q[4],
    })
}

type Extractor = fn(&TrialRecord) -> Option<f64>;

/// Statistics summarized per rung, in output order.
const STATISTICS: &[(&str, Extractor)] = &[
    ("d_n", |r| r.d_n),
    ("ell", |r| r.ell.map(|x| x as f64)),
    ("lambda1", |r| r.lambda1.map(|x| x as f64)),
    ("lambda2", |r| r.lambda2.map(|x| x as f64)),
    ("fix_count", |r| Some(r.fix_count as f64)),
    ("num_cycles", |r| r.num_cycles.map(|x| x as f64)),
    ("lln", |r| rescale_statistic(r, RescaleMode::Lln).ok()),
    ("tw2", |r| rescale_statistic(r, RescaleMode::Tw2).ok()),
    ("tw1", |r| rescale_statistic(r, RescaleMode::Tw1).ok()),
    ("tw4", |r| rescale_statistic(r, RescaleMode::Tw4).ok()),
    ("cycles_minus_fixed_over_n", |r| {
        let h = hypothesis_ratios(r)?;
        Some(h.cycles_minus_fixed / r.n as f64)
    }),
    ("non_square_fixed_over_n", |r| {
        let h = hypothesis_ratios(r)?;
        Some(h.non_square_fixed / r.n as f64)
    }),
];

/// Raw counts behind the regime hypotheses.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HypothesisCounts {
    /// `#(σ) - #₁(σ)`
    pub cycles_minus_fixed: f64,
    /// `n - #₁(σ²)`
    pub non_square_fixed: f64,
    /// `n - 2 #₂(σ)`
    pub outside_two_cycles: f64,
}

impl HypothesisCounts {
    /// The count divided by `n^exponent`.
    pub fn scaled(&self, n: usize, exponent: f64) -> (f64, f64, f64) {
        let s = (n as f64).powf(exponent);
        (
            self.cycles_minus_fixed / s,
            self.non_square_fixed / s,
            self.outside_two_cycles / s,
        )
    }
}

/// `None` unless cycle statistics were recorded.
pub fn hypothesis_ratios(r: &TrialRecord) -> Option<HypothesisCounts> {
    let cycles = r.num_cycles? as f64;
    let sq = r.fixed_points_of_square? as f64;
    let two = r.two_cycles? as f64;
    let n = r.n as f64;
    Some(HypothesisCounts {
        cycles_minus_fixed: cycles - r.fix_count as f64,
        non_square_fixed: n - sq,
        outside_two_cycles: n - 2.0 * two,
    })
}

/// Per-`(n, statistic)` summaries over all records.
pub fn summarize_records(records: &[TrialRecord]) -> SummaryStats {
    let mut by_n: BTreeMap<usize, Vec<&TrialRecord>> = BTreeMap::new();
    for r in records {
        by_n.entry(r.n).or_default().push(r);
    }
    let mut entries = Vec::new();
    for (&n, rung) in &by_n {
        for &(name, extract) in STATISTICS {
            let values: Vec<f64> = rung.iter().filter_map(|r| extract(r)).collect();
            entries.extend(summarize(n, name, &values));
        }
    }
    SummaryStats {
        schema_version: SCHEMA_VERSION,
        entries,
    }
}
