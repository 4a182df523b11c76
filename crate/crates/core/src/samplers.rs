//! Seeded samplers for conjugacy-invariant permutation ensembles.
//!
//! Every sampler draws a cycle type and then fills it uniformly within its
//! conjugacy class, so the law of `σ` equals the law of `ρσρ⁻¹` for any
//! fixed `ρ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Cycle lengths of a conjugacy class, longest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Sorts the lengths; rejects zero-length cycles.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("cycle of length 0".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(2^k, 1^(n - 2k))`.
    pub fn involution(n: usize, two_cycles: usize) -> Result<Self> {
        if 2 * two_cycles > n {
            return Err(Error::InvalidParameter(format!(
                "{two_cycles} two-cycles do not fit in {n} points"
            )));
        }
        let mut parts = vec![2; two_cycles];
        parts.resize(n - two_cycles, 1);
        Ok(Self { parts })
    }
}

/// Uniform permutation of size `n` (Fisher–Yates).
pub fn sample_uniform<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_zero_based_unchecked(images)
}

/// Uniform over the conjugacy class of `t`: a uniform arrangement of the
/// points is cut into consecutive cycles of the prescribed lengths.
pub fn sample_in_cycle_type<R: Rng + ?Sized>(t: &CycleType, rng: &mut R) -> Permutation {
    let n = t.size();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(rng);
    let mut images = vec![0u32; n];
    let mut start = 0;
    for &len in &t.parts {
        let cycle = &order[start..start + len];
        for k in 0..len {
            images[cycle[k] as usize] = cycle[(k + 1) % len];
        }
        start += len;
    }
    Permutation::from_zero_based_unchecked(images)
}

/// Log of the number of involutions of `n` points with `k` two-cycles,
/// `n! / (k! 2^k (n - 2k)!)`, relative to `k = 0`, for every `k`.
fn involution_log_weights(n: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(n / 2 + 1);
    let mut acc = 0.0f64;
    w.push(acc);
    for k in 0..n / 2 {
        let free = (n - 2 * k) as f64;
        acc += (free * (free - 1.0)).ln() - (2.0 * (k + 1) as f64).ln();
        w.push(acc);
    }
    w
}

/// Uniform over involutions of size `n`: the number of two-cycles is drawn
/// from its exact law by inverse CDF, then the class is filled uniformly.
pub fn sample_uniform_involution<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let log_w = involution_log_weights(n);
    let top = log_w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = log_w.iter().map(|&l| (l - top).exp()).collect();
    let total: f64 = weights.iter().sum();
    let mut u = rng.random::<f64>() * total;
    let mut k = weights.len() - 1;
    for (j, &w) in weights.iter().enumerate() {
        if u < w {
            k = j;
            break;
        }
        u -= w;
    }
    let t = CycleType::involution(n, k).expect("k <= n/2 by construction");
    sample_in_cycle_type(&t, rng)
}

/// Uniform fixed-point-free involution: the smallest unmatched point is
/// paired with a uniform unmatched partner until none remain.
pub fn sample_fpf_involution<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Permutation> {
    if n % 2 == 1 {
        return Err(Error::Parity(format!(
            "fixed-point-free involution needs even size, got {n}"
        )));
    }
    // pool holds unmatched points; slot[x] is x's position in pool
    let mut pool: Vec<u32> = (0..n as u32).collect();
    let mut slot: Vec<usize> = (0..n).collect();
    let mut images = vec![0u32; n];
    fn take(pool: &mut Vec<u32>, slot: &mut [usize], pos: usize) -> u32 {
        let x = pool.swap_remove(pos);
        if pos < pool.len() {
            slot[pool[pos] as usize] = pos;
        }
        slot[x as usize] = usize::MAX;
        x
    }
    for i in 0..n {
        if pool.is_empty() {
            break;
        }
        if slot[i] == usize::MAX {
            continue;
        }
        let at = slot[i];
        let a = take(&mut pool, &mut slot, at);
        let pos = rng.random_range(0..pool.len());
        let b = take(&mut pool, &mut slot, pos);
        images[a as usize] = b;
        images[b as usize] = a;
    }
    Ok(Permutation::from_zero_based_unchecked(images))
}

/// How many fixed points a composite regime plants at size `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum FixCountRule {
    /// `c`
    Constant { c: f64 },
    /// `⌊θ n / ln n⌋`
    ThetaLog { theta: f64 },
    /// `⌊c n^β⌋`
    Power { c: f64, beta: f64 },
    /// `⌊p n⌋`
    Fraction { p: f64 },
}

impl FixCountRule {
    /// Target count, clamped to `[0, n]`.
    pub fn count(&self, n: usize) -> usize {
        let nf = n as f64;
        let raw = match *self {
            Self::Constant { c } => c,
            Self::ThetaLog { theta } => theta * nf / nf.ln(),
            Self::Power { c, beta } => c * nf.powf(beta),
            Self::Fraction { p } => p * nf,
        };
        if raw.is_nan() || raw <= 0.0 {
            0
        } else if raw >= nf {
            n
        } else {
            raw.floor() as usize
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: String| Err(Error::InvalidParameter(what));
        match *self {
            Self::Constant { c } if !(c >= 0.0 && c.is_finite()) => bad(format!("c = {c} must be >= 0")),
            Self::ThetaLog { theta } if !(theta > 0.0 && theta.is_finite()) => {
                bad(format!("theta = {theta} must be > 0"))
            }
            Self::Power { c, .. } if !(c >= 0.0 && c.is_finite()) => bad(format!("c = {c} must be >= 0")),
            Self::Power { beta, .. } if !(beta > 0.0 && beta < 1.0) => bad(format!("beta = {beta} must lie in (0, 1)")),
            Self::Fraction { p } if !(0.0..=1.0).contains(&p) => bad(format!("p = {p} must lie in [0, 1]")),
            _ => Ok(()),
        }
    }
}

/// Structure placed on the non-fixed points of a composite regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "core", rename_all = "snake_case")]
pub enum CoreKind {
    /// One cycle through every non-fixed point.
    NCycle,
    /// A perfect matching.
    FpfInvolution,
    /// Cycles of length `cycle_len` (at least 2); a leftover of one point is
    /// absorbed into the last cycle.
    CycleBlocks { cycle_len: usize },
}

impl CoreKind {
    /// The core's cycle type on `size` points, or `None` when no
    /// fixed-point-free type of this kind exists at that size.
    pub fn cycle_type(&self, size: usize) -> Option<CycleType> {
        if size == 0 {
            return Some(CycleType { parts: Vec::new() });
        }
        if size == 1 {
            return None;
        }
        let parts = match *self {
            Self::NCycle => vec![size],
            Self::FpfInvolution if size % 2 == 1 => return None,
            Self::FpfInvolution => vec![2; size / 2],
            Self::CycleBlocks { cycle_len } => blocks(size, cycle_len),
        };
        Some(CycleType { parts })
    }
}

fn blocks(size: usize, k: usize) -> Vec<usize> {
    let mut parts = vec![k; size / k];
    match size % k {
        0 => {}
        1 => *parts.last_mut().expect("size >= 2 and k >= 2") += 1,
        r => parts.push(r),
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// An ensemble of random permutations indexed by size.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "ensemble", rename_all = "snake_case")]
pub enum RegimeSpec {
    Uniform,
    UniformInvolution,
    FpfInvolution,
    NCycle,
    /// Uniform in the class with cycles of length `cycle_len` (see
    /// [`CoreKind::CycleBlocks`]).
    UniformInCycleType {
        cycle_len: usize,
    },
    /// Planted fixed points on a uniform subset, core structure on the rest.
    Composite {
        fix_rule: FixCountRule,
        core: CoreKind,
    },
}

/// A sampled permutation together with the fixed-point bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegimeDraw {
    pub permutation: Permutation,
    /// `fix_rule(n)` for composite regimes.
    pub fix_target: Option<usize>,
    /// Fixed points actually present.
    pub fix_count: usize,
}

impl RegimeSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::UniformInCycleType { cycle_len }
            | Self::Composite {
                core: CoreKind::CycleBlocks { cycle_len },
                ..
            } if *cycle_len < 2 => Err(Error::InvalidParameter(format!(
                "cycle_len = {cycle_len} must be at least 2"
            ))),
            Self::Composite { fix_rule, .. } => fix_rule.validate(),
            _ => Ok(()),
        }
    }

    /// The planted fixed-point count at size `n` after parity repair: `m` is
    /// lowered by one (or raised when `m = 0`) until the core fits.
    pub fn planted_fix_count(fix_rule: &FixCountRule, core: &CoreKind, n: usize) -> Result<usize> {
        let target = fix_rule.count(n);
        [Some(target), target.checked_sub(1), Some(target + 1)]
            .into_iter()
            .flatten()
            .find(|&m| m <= n && core.cycle_type(n - m).is_some())
            .ok_or_else(|| Error::Parity(format!("no admissible fixed-point count near {target} for n = {n}")))
    }

    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<RegimeDraw> {
        self.validate()?;
        let mut fix_target = None;
        let permutation = match *self {
            Self::Uniform => sample_uniform(n, rng),
            Self::UniformInvolution => sample_uniform_involution(n, rng),
            Self::FpfInvolution => sample_fpf_involution(n, rng)?,
            Self::NCycle => {
                let t = if n == 0 { Vec::new() } else { vec![n] };
                sample_in_cycle_type(&CycleType { parts: t }, rng)
            }
            Self::UniformInCycleType { cycle_len } => {
                let t = CoreKind::CycleBlocks { cycle_len }
                    .cycle_type(n)
                    .unwrap_or(CycleType { parts: vec![1] });
                sample_in_cycle_type(&t, rng)
            }
            Self::Composite { fix_rule, core } => {
                fix_target = Some(fix_rule.count(n));
                let m = Self::planted_fix_count(&fix_rule, &core, n)?;
                let t = core.cycle_type(n - m).expect("checked by planted_fix_count");
                plant_fixed_points(n, m, &t, rng)
            }
        };
        let fix_count = permutation.cycle_stats().fixed_points;
        Ok(RegimeDraw {
            permutation,
            fix_target,
            fix_count,
        })
    }
}

/// Fixed points on a uniform `m`-subset `S`, a uniform element of class `t`
/// on `[n] \ S`, relabeled order-preservingly.
fn plant_fixed_points<R: Rng + ?Sized>(n: usize, m: usize, t: &CycleType, rng: &mut R) -> Permutation {
    let mut fixed = vec![false; n];
    for i in index::sample(rng, n, m) {
        fixed[i] = true;
    }
    let core = sample_in_cycle_type(t, rng);
    let rest: Vec<u32> = (0..n as u32).filter(|&i| !fixed[i as usize]).collect();
    let mut images: Vec<u32> = (0..n as u32).collect();
    for (k, &v) in core.images().iter().enumerate() {
        images[rest[k] as usize] = rest[v as usize];
    }
    Permutation::from_zero_based_unchecked(images)
}

/// Draws one permutation from the regime at size `n`.
pub fn sample_regime<R: Rng + ?Sized>(spec: &RegimeSpec, n: usize, rng: &mut R) -> Result<RegimeDraw> {
    spec.sample(n, rng)
}

const ENSEMBLES: &[&str] = &[
    "uniform",
    "uniform_involution",
    "fpf_involution",
    "n_cycle",
    "uniform_in_cycle_type",
    "composite",
];

/// Keys understood by the `key = value` form of a regime.
pub const REGIME_KEYS: &[&str] = &["ensemble", "core", "fix_rule", "theta", "beta", "p", "c", "cycle_len"];

impl RegimeSpec {
    /// Builds a regime from `key = value` pairs (see [`REGIME_KEYS`]).
    pub fn from_pairs(pairs: &BTreeMap<String, String>) -> Result<Self> {
        let get = |k: &str| pairs.get(k).map(String::as_str);
        let num = |k: &str| -> Result<Option<f64>> {
            get(k)
                .map(|v| {
                    v.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("{k} = {v:?} is not a number")))
                })
                .transpose()
        };
        let need =
            |k: &str| -> Result<f64> { num(k)?.ok_or_else(|| Error::InvalidParameter(format!("missing key {k}"))) };
        let cycle_len = || -> Result<usize> {
            let v = get("cycle_len").ok_or_else(|| Error::InvalidParameter("missing key cycle_len".into()))?;
            v.parse()
                .map_err(|_| Error::Parse(format!("cycle_len = {v:?} is not an integer")))
        };
        let ensemble = get("ensemble").ok_or_else(|| Error::InvalidParameter("missing key ensemble".into()))?;
        let spec = match ensemble {
            "uniform" => Self::Uniform,
            "uniform_involution" => Self::UniformInvolution,
            "fpf_involution" => Self::FpfInvolution,
            "n_cycle" => Self::NCycle,
            "uniform_in_cycle_type" => Self::UniformInCycleType {
                cycle_len: cycle_len()?,
            },
            "composite" => {
                let core = match get("core").unwrap_or("n_cycle") {
                    "n_cycle" => CoreKind::NCycle,
                    "fpf_involution" => CoreKind::FpfInvolution,
                    "uniform_in_cycle_type" => CoreKind::CycleBlocks {
                        cycle_len: cycle_len()?,
                    },
                    other => return Err(Error::InvalidParameter(format!("unknown core {other:?}"))),
                };
                let fix_rule = match get("fix_rule").unwrap_or("constant") {
                    "constant" => FixCountRule::Constant {
                        c: num("c")?.unwrap_or(0.0),
                    },
                    "theta_log" => FixCountRule::ThetaLog { theta: need("theta")? },
                    "power" => FixCountRule::Power {
                        c: num("c")?.unwrap_or(1.0),
                        beta: need("beta")?,
                    },
                    "fraction" => FixCountRule::Fraction { p: need("p")? },
                    other => return Err(Error::InvalidParameter(format!("unknown fix_rule {other:?}"))),
                };
                Self::Composite { fix_rule, core }
            }
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown ensemble {other:?}, expected one of {ENSEMBLES:?}"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The `key = value` pairs describing this regime.
    pub fn to_pairs(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        let name = match self {
            Self::Uniform => "uniform",
            Self::UniformInvolution => "uniform_involution",
            Self::FpfInvolution => "fpf_involution",
            Self::NCycle => "n_cycle",
            Self::UniformInCycleType { .. } => "uniform_in_cycle_type",
            Self::Composite { .. } => "composite",
        };
        out.push(("ensemble", name.to_string()));
        if let Self::UniformInCycleType { cycle_len } = self {
            out.push(("cycle_len", cycle_len.to_string()));
        }
        if let Self::Composite { fix_rule, core } = self {
            match core {
                CoreKind::NCycle => out.push(("core", "n_cycle".into())),
                CoreKind::FpfInvolution => out.push(("core", "fpf_involution".into())),
                CoreKind::CycleBlocks { cycle_len } => {
                    out.push(("core", "uniform_in_cycle_type".into()));
                    out.push(("cycle_len", cycle_len.to_string()));
                }
            }
            match fix_rule {
                FixCountRule::Constant { c } => {
                    out.push(("fix_rule", "constant".into()));
                    out.push(("c", c.to_string()));
                }
                FixCountRule::ThetaLog { theta } => {
                    out.push(("fix_rule", "theta_log".into()));
                    out.push(("theta", theta.to_string()));
                }
                FixCountRule::Power { c, beta } => {
                    out.push(("fix_rule", "power".into()));
                    out.push(("c", c.to_string()));
                    out.push(("beta", beta.to_string()));
                }
                FixCountRule::Fraction { p } => {
                    out.push(("fix_rule", "fraction".into()));
                    out.push(("p", p.to_string()));
                }
            }
        }
        out
    }
}

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key = value, got {raw:?}", no + 1)))?;
        let k = k.trim().to_string();
        if out.insert(k.clone(), v.trim().to_string()).is_some() {
            return Err(Error::Parse(format!("line {}: duplicate key {k}", no + 1)));
        }
    }
    Ok(out)
}

impl fmt::Display for RegimeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.to_pairs() {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

impl FromStr for RegimeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pairs = parse_key_values(s)?;
        if let Some(k) = pairs.keys().find(|k| !REGIME_KEYS.contains(&k.as_str())) {
            return Err(Error::Parse(format!("unknown regime key {k}")));
        }
        Self::from_pairs(&pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::trial_rng;

    #[test]
    fn trivial_samplers() {
        let mut rng = trial_rng(1, 1, 0);
        assert_eq!(sample_uniform(1, &mut rng).word(), vec![1]);
        assert_eq!(sample_fpf_involution(2, &mut rng).unwrap().word(), vec![2, 1]);
        let id = CycleType::new(vec![1; 6]).unwrap();
        assert_eq!(sample_in_cycle_type(&id, &mut rng), Permutation::identity(6));
        assert!(sample_uniform(0, &mut rng).is_empty());
        assert!(sample_fpf_involution(0, &mut rng).unwrap().is_empty());
    }

    #[test]
    fn fpf_rejects_odd_size() {
        let mut rng = trial_rng(1, 3, 0);
        assert!(matches!(sample_fpf_involution(3, &mut rng), Err(Error::Parity(_))));
    }

    #[test]
    fn involution_weights_match_counts() {
        // I(6) = 1 + 15 + 45 + 15 = 76
        let w: Vec<f64> = involution_log_weights(6).iter().map(|l| l.exp()).collect();
        let expected = [1.0, 15.0, 45.0, 15.0];
        for (a, b) in w.iter().zip(expected) {
            assert!((a - b).abs() < 1e-9, "{w:?}");
        }
        assert_eq!(involution_log_weights(1).len(), 1);
    }

    #[test]
    fn sampler_structure() {
        let mut rng = trial_rng(5, 50, 0);
        for _ in 0..20 {
            let p = sample_uniform_involution(50, &mut rng);
            assert!(p.is_involution());
            let q = sample_fpf_involution(50, &mut rng).unwrap();
            let s = q.cycle_stats();
            assert_eq!((s.fixed_points, s.two_cycles), (0, 25));
            let t = CycleType::new(vec![3, 5, 2]).unwrap();
            assert_eq!(t.parts(), &[5, 3, 2]);
            let c = sample_in_cycle_type(&t, &mut rng).cycle_stats();
            assert_eq!((c.num_cycles, c.two_cycles, c.fixed_points), (3, 1, 0));
        }
    }

    #[test]
    fn composite_examples() {
        let mut rng = trial_rng(9, 1000, 0);
        let spec = RegimeSpec::Composite {
            fix_rule: FixCountRule::Constant { c: 0.0 },
            core: CoreKind::NCycle,
        };
        let d = spec.sample(40, &mut rng).unwrap();
        let s = d.permutation.cycle_stats();
        assert_eq!((s.num_cycles, s.fixed_points), (1, 0));

        let spec = RegimeSpec::Composite {
            fix_rule: FixCountRule::ThetaLog { theta: 1.0 },
            core: CoreKind::NCycle,
        };
        let d = spec.sample(1000, &mut rng).unwrap();
        let s = d.permutation.cycle_stats();
        assert_eq!(d.fix_target, Some(144));
        assert_eq!(s.fixed_points, 144);
        assert_eq!(s.num_cycles - s.fixed_points, 1);

        let spec = RegimeSpec::Composite {
            fix_rule: FixCountRule::Fraction { p: 0.5 },
            core: CoreKind::FpfInvolution,
        };
        for n in [101, 102, 1001] {
            let d = spec.sample(n, &mut rng).unwrap();
            let s = d.permutation.cycle_stats();
            let m = n / 2;
            assert!(s.fixed_points + 1 >= m && s.fixed_points <= m + 1);
            assert_eq!(s.fixed_points_of_square, n);
            assert_eq!(d.fix_count, s.fixed_points);
        }
    }

    #[test]
    fn parity_repair() {
        let rule = FixCountRule::Constant { c: 0.0 };
        assert_eq!(
            RegimeSpec::planted_fix_count(&rule, &CoreKind::FpfInvolution, 7).unwrap(),
            1
        );
        let rule = FixCountRule::Constant { c: 3.0 };
        assert_eq!(
            RegimeSpec::planted_fix_count(&rule, &CoreKind::FpfInvolution, 10).unwrap(),
            2
        );
        assert_eq!(RegimeSpec::planted_fix_count(&rule, &CoreKind::NCycle, 4).unwrap(), 2);
        assert_eq!(RegimeSpec::planted_fix_count(&rule, &CoreKind::NCycle, 3).unwrap(), 3);
        let rule = FixCountRule::Constant { c: 0.0 };
        assert_eq!(RegimeSpec::planted_fix_count(&rule, &CoreKind::NCycle, 1).unwrap(), 1);
    }

    #[test]
    fn fix_rules() {
        assert_eq!(FixCountRule::ThetaLog { theta: 1.0 }.count(100_000), 8685);
        assert_eq!(FixCountRule::ThetaLog { theta: 1.0 }.count(1), 1);
        assert_eq!(FixCountRule::ThetaLog { theta: 1.0 }.count(0), 0);
        assert_eq!(FixCountRule::Power { c: 2.0, beta: 0.5 }.count(100), 20);
        assert_eq!(FixCountRule::Fraction { p: 0.5 }.count(11), 5);
        assert_eq!(FixCountRule::Constant { c: 50.0 }.count(11), 11);
        assert!(FixCountRule::Power { c: 1.0, beta: 1.0 }.validate().is_err());
        assert!(FixCountRule::Fraction { p: 1.5 }.validate().is_err());
        assert!(FixCountRule::ThetaLog { theta: 0.0 }.validate().is_err());
    }

    #[test]
    fn blocks_absorb_singletons() {
        assert_eq!(blocks(7, 3), vec![4, 3]);
        assert_eq!(blocks(8, 3), vec![3, 3, 2]);
        assert_eq!(blocks(6, 3), vec![3, 3]);
        assert_eq!(CoreKind::CycleBlocks { cycle_len: 3 }.cycle_type(1), None);
    }

    #[test]
    fn regime_text_round_trip() {
        let specs = [
            RegimeSpec::Uniform,
            RegimeSpec::FpfInvolution,
            RegimeSpec::UniformInCycleType { cycle_len: 4 },
            RegimeSpec::Composite {
                fix_rule: FixCountRule::Power { c: 1.5, beta: 0.25 },
                core: CoreKind::CycleBlocks { cycle_len: 3 },
            },
            RegimeSpec::Composite {
                fix_rule: FixCountRule::ThetaLog { theta: 2.0 },
                core: CoreKind::NCycle,
            },
        ];
        for spec in specs {
            let text = spec.to_string();
            assert_eq!(text.parse::<RegimeSpec>().unwrap(), spec, "{text}");
        }
        let parsed: RegimeSpec =
            "ensemble = composite\ncore = fpf_involution # matching\nfix_rule = fraction\np = 0.5\n"
                .parse()
                .unwrap();
        assert_eq!(
            parsed,
            RegimeSpec::Composite {
                fix_rule: FixCountRule::Fraction { p: 0.5 },
                core: CoreKind::FpfInvolution
            }
        );
        assert!("ensemble = mallows".parse::<RegimeSpec>().is_err());
        assert!("ensemble = composite\nfix_rule = fraction"
            .parse::<RegimeSpec>()
            .is_err());
        assert!("ensemble = uniform\nbogus = 1".parse::<RegimeSpec>().is_err());
        assert!("ensemble uniform".parse::<RegimeSpec>().is_err());
    }
}
