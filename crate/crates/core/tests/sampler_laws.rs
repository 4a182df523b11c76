use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shapekit::samplers::sample_regime;
use shapekit::{CoreKind, FixCountRule, Permutation, RegimeSpec};
use statrs::distribution::{ChiSquared, ContinuousCDF};

const DRAWS: usize = 100_000;

fn all_perms(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_zero_based(prefix.clone()).unwrap());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Pearson statistic against `expected` probabilities; panics on a draw
/// outside the support.
fn chi_square(counts: &HashMap<Vec<usize>, usize>, expected: &HashMap<Vec<usize>, f64>) -> (f64, f64) {
    for k in counts.keys() {
        assert!(expected.contains_key(k), "draw {k:?} outside the support");
    }
    let total: usize = counts.values().sum();
    let stat = expected
        .iter()
        .map(|(k, &p)| {
            let e = p * total as f64;
            let o = *counts.get(k).unwrap_or(&0) as f64;
            (o - e).powi(2) / e
        })
        .sum();
    (stat, (expected.len() - 1) as f64)
}

fn assert_law(regime: RegimeSpec, n: usize, seed: u64, weight: impl Fn(&Permutation) -> f64) {
    let support: Vec<Permutation> = all_perms(n).into_iter().filter(|p| weight(p) > 0.0).collect();
    let z: f64 = support.iter().map(&weight).sum();
    let expected: HashMap<_, _> = support.iter().map(|p| (p.word(), weight(p) / z)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = HashMap::new();
    for _ in 0..DRAWS {
        let draw = sample_regime(&regime, n, &mut rng).unwrap();
        *counts.entry(draw.permutation.word()).or_insert(0) += 1;
    }
    let (stat, df) = chi_square(&counts, &expected);
    if df > 0.0 {
        let critical = ChiSquared::new(df).unwrap().inverse_cdf(1.0 - 1e-4);
        assert!(
            stat < critical,
            "{regime:?} n={n}: chi2 {stat:.2} >= {critical:.2} (df {df})"
        );
    }
}

fn indicator(keep: bool) -> f64 {
    if keep {
        1.0
    } else {
        0.0
    }
}

#[test]
fn uniform_is_uniform() {
    for n in 1..=4 {
        assert_law(RegimeSpec::Uniform, n, 10 + n as u64, |_| 1.0);
    }
}

#[test]
fn involutions_are_uniform_over_involutions() {
    for n in 1..=4 {
        assert_law(RegimeSpec::UniformInvolution, n, 20 + n as u64, |p| {
            indicator(p.is_involution())
        });
    }
}

#[test]
fn fpf_involutions_are_uniform_matchings() {
    for n in [2, 4] {
        assert_law(RegimeSpec::FpfInvolution, n, 30 + n as u64, |p| {
            indicator(p.is_involution() && p.cycle_stats().fixed_points == 0)
        });
    }
}

#[test]
fn n_cycles_are_uniform() {
    for n in 1..=4 {
        assert_law(RegimeSpec::NCycle, n, 40 + n as u64, |p| {
            indicator(p.cycle_stats().num_cycles == 1)
        });
    }
}

#[test]
fn composite_plants_uniform_fixed_sets() {
    // n = 4, m = 2: one transposition on a uniform pair
    let half = RegimeSpec::Composite {
        fix_rule: FixCountRule::Fraction { p: 0.5 },
        core: CoreKind::FpfInvolution,
    };
    assert_law(half, 4, 51, |p| {
        let s = p.cycle_stats();
        indicator(s.fixed_points == 2 && s.two_cycles == 1)
    });
    // n = 4, m = 1: a 3-cycle on the other points
    let one = RegimeSpec::Composite {
        fix_rule: FixCountRule::Constant { c: 1.0 },
        core: CoreKind::NCycle,
    };
    assert_law(one, 4, 52, |p| {
        let s = p.cycle_stats();
        indicator(s.fixed_points == 1 && s.num_cycles == 2)
    });
}

#[test]
fn cycle_type_class_is_uniform() {
    assert_law(RegimeSpec::UniformInCycleType { cycle_len: 2 }, 4, 61, |p| {
        indicator(p.is_involution() && p.cycle_stats().fixed_points == 0)
    });
    // 5 = 3 + 2
    assert_law(RegimeSpec::UniformInCycleType { cycle_len: 3 }, 5, 62, |p| {
        let s = p.cycle_stats();
        indicator(s.num_cycles == 2 && s.two_cycles == 1 && s.fixed_points == 0)
    });
}

#[test]
fn conjugation_preserves_every_law() {
    // P(σ) depends only on the class: pooled counts within a class are flat
    let regimes = [
        RegimeSpec::Uniform,
        RegimeSpec::UniformInvolution,
        RegimeSpec::Composite {
            fix_rule: FixCountRule::Constant { c: 1.0 },
            core: CoreKind::FpfInvolution,
        },
    ];
    for (k, regime) in regimes.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(70 + k as u64);
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for _ in 0..DRAWS {
            let p = sample_regime(&regime, 4, &mut rng).unwrap().permutation;
            *counts.entry(p.word()).or_insert(0) += 1;
        }
        let mut classes: HashMap<(usize, usize, usize), Vec<Vec<usize>>> = HashMap::new();
        for p in all_perms(4) {
            let s = p.cycle_stats();
            classes
                .entry((s.num_cycles, s.fixed_points, s.two_cycles))
                .or_default()
                .push(p.word());
        }
        for members in classes.values() {
            let class_total: usize = members.iter().map(|w| counts.get(w).copied().unwrap_or(0)).sum();
            if class_total == 0 || members.len() == 1 {
                continue;
            }
            let sub: HashMap<_, _> = members
                .iter()
                .map(|w| (w.clone(), counts.get(w).copied().unwrap_or(0)))
                .collect();
            let expected: HashMap<_, _> = members
                .iter()
                .map(|w| (w.clone(), 1.0 / members.len() as f64))
                .collect();
            let (stat, df) = chi_square(&sub, &expected);
            let critical = ChiSquared::new(df).unwrap().inverse_cdf(1.0 - 1e-4);
            assert!(stat < critical, "{regime:?}: class not flat, chi2 {stat:.2}");
        }
    }
}

#[test]
fn involution_two_cycle_counts_at_larger_n() {
    // P(k two-cycles) ∝ n! / (k! 2^k (n-2k)!)
    let n = 12usize;
    let log_fact = |m: usize| (1..=m).map(|i| (i as f64).ln()).sum::<f64>();
    let weights: Vec<f64> = (0..=n / 2)
        .map(|k| (log_fact(n) - log_fact(k) - k as f64 * 2f64.ln() - log_fact(n - 2 * k)).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    let mut counts = vec![0usize; n / 2 + 1];
    for _ in 0..DRAWS {
        let p = sample_regime(&RegimeSpec::UniformInvolution, n, &mut rng)
            .unwrap()
            .permutation;
        assert!(p.is_involution());
        counts[p.cycle_stats().two_cycles] += 1;
    }
    let stat: f64 = counts
        .iter()
        .zip(&weights)
        .map(|(&o, &w)| {
            let e = w / z * DRAWS as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let critical = ChiSquared::new((n / 2) as f64).unwrap().inverse_cdf(1.0 - 1e-4);
    assert!(stat < critical, "chi2 {stat:.2} >= {critical:.2}");
}

#[test]
fn composite_fixed_counts_follow_the_rule() {
    let regime = RegimeSpec::Composite {
        fix_rule: FixCountRule::ThetaLog { theta: 1.0 },
        core: CoreKind::NCycle,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    for n in [10, 100, 1000, 5000] {
        let draw = sample_regime(&regime, n, &mut rng).unwrap();
        let target = (n as f64 / (n as f64).ln()).floor() as usize;
        assert_eq!(draw.fix_target, Some(target));
        assert_eq!(draw.fix_count, target);
        assert_eq!(draw.permutation.cycle_stats().num_cycles, target + 1);
    }
}
