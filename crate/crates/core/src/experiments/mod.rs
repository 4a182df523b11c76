//! Monte Carlo harness: sampling ladders of sizes, per-trial measurements,
//! order-independent summaries and two-sample comparisons.
//!
//! Each trial draws from `rng::trial_rng(seed, n, trial)`, so the set of
//! records is a pure function of the config regardless of worker count. Rows
//! are streamed in completion order; sort by `(n, trial_index)` to compare
//! runs.

mod config;
mod ks;
mod manifest;
mod record;
mod rescale;
mod runner;
mod stats;

pub use config::{parse_ladder, parse_measurements, ExperimentConfig, Measurement};
pub use ks::{ks_against_table, ks_two_sample, CdfTable};
pub use manifest::PilotManifest;
pub use record::{read_records, RecordWriter, TrialRecord, SCHEMA_VERSION};
pub use rescale::{lambda2_window, rescale_statistic, RescaleMode};
pub use runner::{
    draw_trial, measure_permutation, run_experiment, run_experiment_with_sink, run_trial, ExperimentOutput,
};
pub use stats::{
    hypothesis_ratios, quantile_sorted, summarize, summarize_records, HypothesisCounts, StatSummary, SummaryStats,
    QUANTILE_LEVELS,
};
