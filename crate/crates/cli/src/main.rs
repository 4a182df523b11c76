//! `shapekit` command-line interface.
//!
//! Exit codes: 0 success, 1 invalid input, 2 a verification suite found a
//! counterexample.

mod verify;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use shapekit::experiments::{
    ks_against_table, ks_two_sample, read_records, rescale_statistic, run_experiment, CdfTable, ExperimentConfig,
    RescaleMode,
};
use shapekit::geom::{scaled_sup_distance, write_scaled_csv, HeightProfile};
use shapekit::oracles::verify_lemma34;
use shapekit::rng::trial_rng;
use shapekit::samplers::parse_key_values;
use shapekit::{schensted_shape, Error, Permutation, RegimeSpec, YoungDiagram};

#[derive(Parser)]
#[command(
    name = "shapekit",
    version,
    about = "Robinson-Schensted shapes of random permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw one permutation (the same draw as experiment trial 0 at this n).
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        regime: RegimeArgs,
    },
    /// Print the shape of a permutation given by --perm or on stdin.
    Shape {
        #[arg(long)]
        perm: Option<String>,
    },
    /// Height profile as `t,L` rows, or the rescaled `s,F_n,Phi_p` rows with --fixed.
    Profile {
        #[command(flatten)]
        input: ShapeInput,
        /// Fixed-point count m; switches to the rescaled profile.
        #[arg(long)]
        fixed: Option<usize>,
    },
    /// Distance to the limit shape (--fixed) or between two diagrams (--to).
    Distance {
        #[command(flatten)]
        input: ShapeInput,
        #[arg(long, conflicts_with = "to")]
        fixed: Option<usize>,
        #[arg(long)]
        to: Option<String>,
    },
    /// Run a Monte Carlo experiment from --config and/or flags.
    Experiment {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated n ladder, e.g. 1e3,4000,16000.
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        summary: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        /// Comma-separated subset of shape_distance,ell,lambda1,lambda2,cycle_stats.
        #[arg(long)]
        measurements: Option<String>,
        /// Add a wall_time column (makes the CSV timing-dependent).
        #[arg(long)]
        wall_time: bool,
        #[command(flatten)]
        regime: RegimeArgs,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random cases.
        #[arg(long)]
        pairs: Option<usize>,
        /// Largest size drawn.
        #[arg(long)]
        n: Option<usize>,
    },
    /// KS distance between rescaled statistics of two record files, or of one
    /// file against a tabulated `x,F(x)` CDF.
    Ks {
        #[arg(long)]
        x: PathBuf,
        #[arg(long, required_unless_present = "table")]
        y: Option<PathBuf>,
        #[arg(long, conflicts_with = "y")]
        table: Option<PathBuf>,
        /// tw2, tw1, tw4, lln or corW_l1[:theta].
        #[arg(long, default_value = "tw2")]
        mode: String,
    },
}

#[derive(Args)]
struct ShapeInput {
    /// Diagram as comma-separated parts.
    #[arg(long, conflicts_with = "perm")]
    diagram: Option<String>,
    /// Permutation word, 1-based, whitespace separated.
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Args, Default)]
struct RegimeArgs {
    /// uniform, uniform_involution, fpf_involution, n_cycle, uniform_in_cycle_type or composite.
    #[arg(long)]
    regime: Option<String>,
    /// Composite core: n_cycle, fpf_involution or uniform_in_cycle_type.
    #[arg(long)]
    core: Option<String>,
    /// constant, theta_log, power or fraction; inferred from the parameter given.
    #[arg(long)]
    fix_rule: Option<String>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    cycle_len: Option<usize>,
}

impl RegimeArgs {
    /// Writes the given flags over `pairs`; a new --regime discards the old
    /// regime keys.
    fn apply(&self, pairs: &mut BTreeMap<String, String>) {
        if let Some(r) = &self.regime {
            pairs.retain(|k, _| !shapekit::samplers::REGIME_KEYS.contains(&k.as_str()));
            pairs.insert("ensemble".into(), r.clone());
        }
        let inferred = match (&self.fix_rule, self.theta, self.p, self.beta, self.c) {
            (Some(rule), ..) => Some(rule.clone()),
            (None, Some(_), ..) => Some("theta_log".into()),
            (None, None, Some(_), ..) => Some("fraction".into()),
            (None, None, None, Some(_), _) => Some("power".into()),
            (None, None, None, None, Some(_)) => Some("constant".into()),
            _ => None,
        };
        let composite = pairs.get("ensemble").map(String::as_str) == Some("composite");
        let flags = [
            ("core", self.core.clone()),
            ("theta", self.theta.map(|v| v.to_string())),
            ("beta", self.beta.map(|v| v.to_string())),
            ("p", self.p.map(|v| v.to_string())),
            ("c", self.c.map(|v| v.to_string())),
            ("cycle_len", self.cycle_len.map(|v| v.to_string())),
            ("fix_rule", inferred.filter(|_| composite)),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                pairs.insert(k.into(), v);
            }
        }
    }

    fn spec(&self) -> Result<RegimeSpec, Error> {
        let mut pairs = BTreeMap::new();
        pairs.insert("ensemble".to_string(), "uniform".to_string());
        self.apply(&mut pairs);
        RegimeSpec::from_pairs(&pairs)
    }
}

/// The given seed, or a fresh one announced on stderr.
fn seed_or_fresh(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let s = u64::from(rand::random::<u32>());
        eprintln!("seed = {s}");
        s
    })
}

fn parse_perm(text: &str) -> Result<Permutation, Error> {
    text.parse()
}

fn read_shape(input: &ShapeInput) -> Result<YoungDiagram, Error> {
    match (&input.diagram, &input.perm) {
        (Some(d), _) => d.parse(),
        (None, Some(p)) => Ok(schensted_shape(&parse_perm(p)?)),
        (None, None) => Err(Error::InvalidParameter("give --diagram or --perm".into())),
    }
}

enum Failure {
    Invalid(Error),
    Falsified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Invalid(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Invalid(e.into())
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::Sample { n, seed, regime } => {
            let spec = regime.spec()?;
            let seed = seed_or_fresh(seed);
            let draw = spec.sample(n, &mut trial_rng(seed, n, 0))?;
            writeln!(out, "{}", draw.permutation)?;
        }
        Command::Shape { perm } => {
            let text = match perm {
                Some(p) => p,
                None => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                }
            };
            writeln!(out, "{}", schensted_shape(&parse_perm(&text)?))?;
        }
        Command::Profile { input, fixed } => {
            let d = read_shape(&input)?;
            match fixed {
                Some(m) => write_scaled_csv(&d, d.size(), m, &mut out)?,
                None => HeightProfile::new(d).write_csv(&mut out)?,
            }
        }
        Command::Distance { input, fixed, to } => {
            let d = read_shape(&input)?;
            match (fixed, to) {
                (_, Some(other)) => {
                    let report = verify_lemma34(&d, &other.parse()?);
                    writeln!(out, "{}", serde_json::to_string(&report).map_err(Error::from)?)?;
                    if !report.holds {
                        return Err(Failure::Falsified("profile distance exceeds its bound".into()));
                    }
                }
                (m, None) => writeln!(out, "{}", scaled_sup_distance(&d, d.size(), m.unwrap_or(0))?)?,
            }
        }
        Command::Experiment {
            config,
            n,
            trials,
            seed,
            out: output,
            summary,
            workers,
            measurements,
            wall_time,
            regime,
        } => {
            let mut pairs = match &config {
                Some(path) => parse_key_values(&std::fs::read_to_string(path)?)?,
                None => BTreeMap::new(),
            };
            if !pairs.contains_key("ensemble") && regime.regime.is_none() {
                pairs.insert("ensemble".into(), "uniform".into());
            }
            regime.apply(&mut pairs);
            let flags = [
                ("n_ladder", n),
                ("trials", trials.map(|v| v.to_string())),
                ("out", output.map(|p| p.display().to_string())),
                ("summary", summary.map(|p| p.display().to_string())),
                ("workers", workers.map(|v| v.to_string())),
                ("measurements", measurements),
                ("wall_time", wall_time.then(|| "true".to_string())),
            ];
            for (k, v) in flags {
                if let Some(v) = v {
                    pairs.insert(k.into(), v);
                }
            }
            if seed.is_some() || !pairs.contains_key("seed") {
                let s = seed_or_fresh(seed);
                pairs.insert("seed".into(), s.to_string());
            }
            let cfg = ExperimentConfig::from_pairs(&pairs)?;
            let result = run_experiment(&cfg)?;
            match cfg.summary_path() {
                Some(path) => writeln!(out, "{} records, summary in {}", result.records.len(), path.display())?,
                None => writeln!(out, "{}", result.summary.to_json())?,
            }
        }
        Command::Verify { suite, seed, pairs, n } => {
            let seed = seed_or_fresh(seed);
            let report = verify::run(suite, seed, pairs, n)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report).map_err(Error::from)?)?;
            if report.failures > 0 {
                out.flush()?;
                return Err(Failure::Falsified(format!("{} counterexamples", report.failures)));
            }
        }
        Command::Ks { x, y, table, mode } => {
            let mode: RescaleMode = mode.parse()?;
            let sample = |path: &PathBuf| -> Result<Vec<f64>, Error> {
                read_records(File::open(path)?)?
                    .iter()
                    .map(|r| rescale_statistic(r, mode))
                    .collect()
            };
            let xs = sample(&x)?;
            let d = match (y, table) {
                (Some(y), _) => ks_two_sample(&xs, &sample(&y)?)?,
                (None, Some(t)) => ks_against_table(&xs, &CdfTable::from_csv(File::open(t)?)?)?,
                (None, None) => unreachable!("clap requires --y or --table"),
            };
            writeln!(out, "{d}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Falsified(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
