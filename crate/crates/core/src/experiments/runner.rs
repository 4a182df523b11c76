use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::sync::mpsc;
use std::time::Instant;

use rayon::prelude::*;

use super::config::{ExperimentConfig, Measurement};
use super::record::{RecordWriter, TrialRecord};
use super::stats::{summarize_records, SummaryStats};
use crate::error::{Error, Result};
use crate::geom::scaled_sup_distance;
use crate::perm::Permutation;
use crate::rng::trial_rng;
use crate::rsk::{lds, lis, schensted_shape};
use crate::samplers::{RegimeDraw, RegimeSpec};

/// Records in canonical `(n, trial_index)` order plus their summary.
#[derive(Clone, Debug)]
pub struct ExperimentOutput {
    pub records: Vec<TrialRecord>,
    pub summary: SummaryStats,
}

/// The permutation drawn for trial `trial` at size `n`.
pub fn draw_trial(regime: &RegimeSpec, n: usize, seed: u64, trial: u64) -> Result<RegimeDraw> {
    let mut rng = trial_rng(seed, n, trial);
    regime.sample(n, &mut rng)
}

/// Measures an already sampled permutation.
pub fn measure_permutation(
    draw: &RegimeDraw,
    trial_index: u64,
    measurements: &BTreeSet<Measurement>,
) -> Result<TrialRecord> {
    let p: &Permutation = &draw.permutation;
    let n = p.len();
    let wants = |m| measurements.contains(&m);
    let mut record = TrialRecord {
        n,
        trial_index,
        fix_target: draw.fix_target,
        fix_count: draw.fix_count,
        num_cycles: None,
        two_cycles: None,
        fixed_points_of_square: None,
        d_n: None,
        ell: None,
        lambda1: None,
        lambda2: None,
        wall_time: 0.0,
    };
    if wants(Measurement::CycleStats) {
        let s = p.cycle_stats();
        record.num_cycles = Some(s.num_cycles);
        record.two_cycles = Some(s.two_cycles);
        record.fixed_points_of_square = Some(s.fixed_points_of_square);
    }
    if wants(Measurement::ShapeDistance) || wants(Measurement::Lambda2) {
        let shape = schensted_shape(p);
        if wants(Measurement::ShapeDistance) {
            record.d_n = Some(scaled_sup_distance(&shape, n, draw.fix_count)?);
        }
        if wants(Measurement::Lambda2) {
            record.lambda2 = Some(shape.part(2));
        }
        if wants(Measurement::Ell) {
            record.ell = Some(shape.num_rows());
        }
        if wants(Measurement::Lambda1) {
            record.lambda1 = Some(shape.first_part());
        }
    } else {
        if wants(Measurement::Ell) {
            record.ell = Some(lds(p));
        }
        if wants(Measurement::Lambda1) {
            record.lambda1 = Some(lis(p));
        }
    }
    Ok(record)
}

/// Samples and measures one trial from its own derived stream.
pub fn run_trial(
    regime: &RegimeSpec,
    n: usize,
    seed: u64,
    trial: u64,
    measurements: &BTreeSet<Measurement>,
) -> Result<TrialRecord> {
    let start = Instant::now();
    let draw = draw_trial(regime, n, seed, trial)?;
    let mut record = measure_permutation(&draw, trial, measurements)?;
    record.wall_time = start.elapsed().as_secs_f64();
    Ok(record)
}

/// Runs every trial, streaming CSV rows to `sink` in completion order.
pub fn run_experiment_with_sink<W: Write>(cfg: &ExperimentConfig, sink: Option<W>) -> Result<ExperimentOutput> {
    cfg.validate()?;
    let tasks: Vec<(usize, u64)> = cfg
        .n_ladder
        .iter()
        .flat_map(|&n| (0..cfg.trials).map(move |t| (n, t)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let mut writer = sink.map(|w| RecordWriter::new(w, cfg.wall_time)).transpose()?;
    let mut records = Vec::with_capacity(tasks.len());

    let (tx, rx) = mpsc::channel::<Result<TrialRecord>>();
    let first_error = std::thread::scope(|scope| {
        scope.spawn(|| {
            pool.install(|| {
                tasks.par_iter().for_each_with(tx, |tx, &(n, t)| {
                    // the receiver only hangs up after an error
                    let result = run_trial(&cfg.regime, n, cfg.seed, t, &cfg.measurements).map(|mut r| {
                        if !cfg.wall_time {
                            r.wall_time = 0.0;
                        }
                        r
                    });
                    let _ = tx.send(result);
                });
            });
        });
        let mut first_error = None;
        for result in rx {
            match result {
                Ok(record) => {
                    if let Some(w) = writer.as_mut() {
                        if let Err(e) = w.write(&record) {
                            first_error.get_or_insert(e);
                        }
                    }
                    records.push(record);
                }
                Err(e) => {
                    first_error.get_or_insert(e);
                }
            }
        }
        first_error
    });
    if let Some(e) = first_error {
        return Err(e);
    }
    if let Some(w) = writer {
        w.into_inner()?.flush()?;
    }
    records.sort_by_key(TrialRecord::key);
    for r in &records {
        r.check()?;
    }
    let summary = summarize_records(&records);
    Ok(ExperimentOutput { records, summary })
}

/// Runs the experiment, writing the records CSV and summary JSON when the
/// config names output paths.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    let output = match &cfg.output {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            run_experiment_with_sink(cfg, Some(BufWriter::new(File::create(path)?)))?
        }
        None => run_experiment_with_sink::<std::io::Sink>(cfg, None)?,
    };
    if let Some(path) = cfg.summary_path() {
        fs::write(path, output.summary.to_json() + "\n")?;
    }
    Ok(output)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samplers::{CoreKind, FixCountRule};

    #[test]
    fn single_trial_bytes_are_reproducible() {
        let regime = RegimeSpec::Composite {
            fix_rule: FixCountRule::Constant { c: 0.0 },
            core: CoreKind::NCycle,
        };
        let cfg = ExperimentConfig::new(regime, vec![100], 1, 2024);
        let run = || {
            let mut buf = Vec::new();
            run_experiment_with_sink(&cfg, Some(&mut buf)).unwrap();
            buf
        };
        let first = run();
        assert_eq!(first, run());
        let text = String::from_utf8(first).unwrap();
        assert_eq!(text.lines().count(), 2);
    }

    #[test]
    fn fast_path_agrees_with_full_shape() {
        let regime = RegimeSpec::Uniform;
        let all: BTreeSet<_> = Measurement::ALL.into_iter().collect();
        let fast: BTreeSet<_> = [Measurement::Ell, Measurement::Lambda1].into_iter().collect();
        for t in 0..10 {
            let a = run_trial(&regime, 300, 5, t, &all).unwrap();
            let b = run_trial(&regime, 300, 5, t, &fast).unwrap();
            assert_eq!((a.ell, a.lambda1), (b.ell, b.lambda1));
            assert!(a.d_n.is_some() && b.d_n.is_none());
            a.check().unwrap();
        }
    }

    #[test]
    fn surfaces_sampler_errors() {
        let mut cfg = ExperimentConfig::new(RegimeSpec::FpfInvolution, vec![10], 2, 1);
        assert!(run_experiment(&cfg).is_ok());
        cfg.n_ladder = vec![9];
        assert!(run_experiment(&cfg).is_err());
    }
}
