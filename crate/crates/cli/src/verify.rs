//! Verification suites behind `shapekit verify`.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use shapekit::geom::{lemma34_witness, scaled_height, scaled_unit_height, HeightProfile};
use shapekit::oracles::{greene_report, verify_lemma15, verify_lemma34};
use shapekit::samplers::{
    sample_fpf_involution, sample_in_cycle_type, sample_regime, sample_uniform, sample_uniform_involution,
};
use shapekit::{schensted_shape, CoreKind, CycleType, FixCountRule, Permutation, RegimeSpec, Result};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    Greene,
    Lemma15,
    Lemma34,
    Convention,
    Samplers,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: usize,
    /// First counterexample, if any.
    pub first_failure: Option<Value>,
    pub stats: Value,
}

struct Tally {
    cases: usize,
    failures: usize,
    first: Option<Value>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failures: 0,
            first: None,
        }
    }

    fn record(&mut self, failure: Option<Value>) {
        self.cases += 1;
        if let Some(f) = failure {
            self.failures += 1;
            self.first.get_or_insert(f);
        }
    }

    fn report(self, suite: Suite, seed: u64, stats: Value) -> Report {
        Report {
            suite: format!("{suite:?}").to_lowercase(),
            seed,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first,
            stats,
        }
    }
}

pub fn run(suite: Suite, seed: u64, cases: Option<usize>, max_n: Option<usize>) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Greene => greene(seed, &mut rng, cases.unwrap_or(200), max_n.unwrap_or(8)),
        Suite::Lemma15 => lemma15(seed, &mut rng, cases.unwrap_or(10_000), max_n.unwrap_or(200)),
        Suite::Lemma34 => lemma34(seed, &mut rng, cases.unwrap_or(10_000), max_n.unwrap_or(300)),
        Suite::Convention => convention(seed, &mut rng, cases.unwrap_or(100), max_n.unwrap_or(500)),
        Suite::Samplers => samplers(seed, &mut rng, cases.unwrap_or(20_000), max_n.unwrap_or(4)),
    }
}

fn greene_failure(p: &Permutation) -> Result<Option<Value>> {
    let report = greene_report(p)?;
    let d = schensted_shape(p);
    let c = d.conjugate();
    let ok = (1..=p.len())
        .all(|i| report.increasing[i - 1] == d.partial_sum(i) && report.decreasing[i - 1] == c.partial_sum(i));
    Ok((!ok).then(|| json!({ "report": report, "shape": d.to_string() })))
}

fn all_perms(n: usize) -> Vec<Permutation> {
    let mut word: Vec<u32> = (0..n as u32).collect();
    let mut out = vec![Permutation::identity(n)];
    while let Some(i) = (1..n).rev().find(|&i| word[i - 1] < word[i]) {
        let j = (i..n).rev().find(|&j| word[j] > word[i - 1]).expect("successor exists");
        word.swap(i - 1, j);
        word[i..].reverse();
        out.push(Permutation::from_zero_based(word.clone()).expect("valid word"));
    }
    out
}

/// Exhaustive up to size 6, then `cases` random permutations per size up to
/// `max_n` (at most 16).
fn greene(seed: u64, rng: &mut ChaCha8Rng, cases: usize, max_n: usize) -> Result<Report> {
    let mut tally = Tally::new();
    for n in 1..=max_n.min(6) {
        for p in all_perms(n) {
            tally.record(greene_failure(&p)?);
        }
    }
    for n in 7..=max_n {
        for _ in 0..cases {
            tally.record(greene_failure(&sample_uniform(n, rng))?);
        }
    }
    Ok(tally.report(Suite::Greene, seed, json!({ "max_n": max_n })))
}

fn random_regime(rng: &mut ChaCha8Rng) -> RegimeSpec {
    let fix_rule = match rng.random_range(0..4) {
        0 => FixCountRule::Constant {
            c: rng.random_range(0.0..10.0),
        },
        1 => FixCountRule::ThetaLog {
            theta: rng.random_range(0.1..3.0),
        },
        2 => FixCountRule::Power {
            c: rng.random_range(0.1..2.0),
            beta: rng.random_range(0.1..0.9),
        },
        _ => FixCountRule::Fraction {
            p: rng.random_range(0.0..=1.0),
        },
    };
    let core = match rng.random_range(0..3) {
        0 => CoreKind::NCycle,
        1 => CoreKind::FpfInvolution,
        _ => CoreKind::CycleBlocks {
            cycle_len: rng.random_range(2..6),
        },
    };
    RegimeSpec::Composite { fix_rule, core }
}

fn random_cycle_type(rng: &mut ChaCha8Rng, n: usize) -> CycleType {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let k = rng.random_range(1..=left);
        parts.push(k);
        left -= k;
    }
    CycleType::new(parts).expect("positive parts")
}

/// Cycles through the five samplers.
fn lemma15(seed: u64, rng: &mut ChaCha8Rng, cases: usize, max_n: usize) -> Result<Report> {
    let mut tally = Tally::new();
    for k in 0..cases {
        let n = rng.random_range(0..=max_n);
        let p = match k % 5 {
            0 => sample_uniform(n, rng),
            1 => {
                let t = random_cycle_type(rng, n);
                sample_in_cycle_type(&t, rng)
            }
            2 => sample_uniform_involution(n, rng),
            3 => sample_fpf_involution(n - n % 2, rng)?,
            _ => {
                let regime = random_regime(rng);
                sample_regime(&regime, n.max(2), rng)?.permutation
            }
        };
        tally.record(verify_lemma15(&p).err().map(|v| json!(v)));
    }
    Ok(tally.report(Suite::Lemma15, seed, json!({ "max_n": max_n })))
}

fn lemma34(seed: u64, rng: &mut ChaCha8Rng, cases: usize, max_n: usize) -> Result<Report> {
    let mut tally = Tally::new();
    let mut min_slack = f64::INFINITY;
    for _ in 0..cases {
        let shape = |rng: &mut ChaCha8Rng| {
            let n = rng.random_range(0..=max_n);
            schensted_shape(&sample_uniform(n, rng))
        };
        let (a, b) = (shape(rng), shape(rng));
        let report = verify_lemma34(&a, &b);
        min_slack = min_slack.min(report.slack);
        let holds = lemma34_witness(&a, &b).is_some();
        tally.record((!holds).then(|| json!(report)));
    }
    Ok(tally.report(Suite::Lemma34, seed, json!({ "max_n": max_n, "min_slack": min_slack })))
}

fn convention(seed: u64, rng: &mut ChaCha8Rng, cases: usize, max_n: usize) -> Result<Report> {
    const TOL: f64 = 1e-12;
    let mut tally = Tally::new();
    let mut worst = 0.0f64;
    for _ in 0..cases {
        let n = rng.random_range(1..=max_n.max(1));
        let d = schensted_shape(&sample_uniform(n, rng));
        let profile = HeightProfile::new(d.clone());
        let mut first = None;
        for _ in 0..100 {
            let s = rng.random_range(-2.0..2.0);
            let gap = (scaled_height(&profile, n, s) - scaled_unit_height(&profile, n, s)).abs();
            worst = worst.max(gap);
            if gap > TOL && first.is_none() {
                first = Some(json!({ "diagram": d.to_string(), "s": s, "gap": gap }));
            }
        }
        tally.record(first);
    }
    Ok(tally.report(Suite::Convention, seed, json!({ "max_gap": worst, "tolerance": TOL })))
}

/// Support and flatness checks: every draw has the regime's structure, and
/// within each conjugacy class of size `max_n` the draws are spread evenly
/// (Pearson statistic within 6 standard deviations of its mean).
fn samplers(seed: u64, rng: &mut ChaCha8Rng, cases: usize, max_n: usize) -> Result<Report> {
    let n = max_n.clamp(2, 6) & !1;
    let regimes = [
        RegimeSpec::Uniform,
        RegimeSpec::UniformInvolution,
        RegimeSpec::FpfInvolution,
        RegimeSpec::NCycle,
        RegimeSpec::UniformInCycleType { cycle_len: 2 },
        RegimeSpec::Composite {
            fix_rule: FixCountRule::Constant { c: 1.0 },
            core: CoreKind::NCycle,
        },
    ];
    let mut tally = Tally::new();
    let mut pearson = Vec::new();
    for regime in regimes {
        let mut counts = std::collections::BTreeMap::<Vec<usize>, usize>::new();
        for _ in 0..cases {
            let draw = sample_regime(&regime, n, rng)?;
            let p = draw.permutation;
            let s = p.cycle_stats();
            let ok = match regime {
                RegimeSpec::Uniform => true,
                RegimeSpec::UniformInvolution => p.is_involution(),
                RegimeSpec::FpfInvolution | RegimeSpec::UniformInCycleType { .. } => {
                    p.is_involution() && s.fixed_points == 0
                }
                RegimeSpec::NCycle => s.num_cycles == 1,
                RegimeSpec::Composite { .. } => s.fixed_points == 1 && s.num_cycles == 2,
            };
            tally.record((!ok).then(|| json!({ "regime": regime.to_string(), "sigma": p.word() })));
            *counts.entry(p.word()).or_default() += 1;
        }
        // group draws by class and compare each class with a flat law
        let mut classes = std::collections::BTreeMap::<(usize, usize, usize), Vec<usize>>::new();
        for (word, &c) in &counts {
            let s = Permutation::new(word.clone())?.cycle_stats();
            classes
                .entry((s.num_cycles, s.fixed_points, s.two_cycles))
                .or_default()
                .push(c);
        }
        for (class, observed) in classes {
            let size = class_size(n, class);
            if size < 2 {
                continue;
            }
            let total: usize = observed.iter().sum();
            let e = total as f64 / size as f64;
            let missing = (size - observed.len()) as f64 * e;
            let stat = observed.iter().map(|&o| (o as f64 - e).powi(2) / e).sum::<f64>() + missing;
            let df = (size - 1) as f64;
            let ok = stat <= df + 6.0 * (2.0 * df).sqrt();
            pearson.push(json!({ "regime": regime.to_string().trim(), "class": class, "chi2": stat, "df": df }));
            tally.record((!ok).then(|| json!({ "regime": regime.to_string(), "class": class, "chi2": stat })));
        }
    }
    Ok(tally.report(
        Suite::Samplers,
        seed,
        json!({ "n": n, "draws_per_regime": cases, "classes": pearson }),
    ))
}

/// Members of the class with the given (cycles, fixed points, two-cycles)
/// among all permutations of size `n`, counted by enumeration.
fn class_size(n: usize, class: (usize, usize, usize)) -> usize {
    all_perms(n)
        .iter()
        .filter(|p| {
            let s = p.cycle_stats();
            (s.num_cycles, s.fixed_points, s.two_cycles) == class
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_factorials() {
        assert_eq!(all_perms(0).len(), 1);
        assert_eq!(all_perms(5).len(), 120);
        let mut words: Vec<_> = all_perms(4).iter().map(Permutation::word).collect();
        words.dedup();
        assert_eq!(words.len(), 24);
    }

    #[test]
    fn suites_pass_and_repeat() {
        for suite in [
            Suite::Greene,
            Suite::Lemma15,
            Suite::Lemma34,
            Suite::Convention,
            Suite::Samplers,
        ] {
            let a = run(suite, 11, Some(200), None).unwrap();
            assert_eq!(a.failures, 0, "{suite:?}: {:?}", a.first_failure);
            let b = run(suite, 11, Some(200), None).unwrap();
            assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        }
    }
}
