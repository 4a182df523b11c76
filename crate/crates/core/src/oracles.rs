//! Brute-force ground truth: Greene invariants by subset enumeration, the
//! corner construction of the height profile, and exact checks of the
//! combinatorial inequalities relating a permutation to its fixed-point-free
//! part.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom;
use crate::perm::Permutation;
use crate::rsk::{lis_of, schensted_shape, YoungDiagram};

/// Largest size the subset scan accepts (2^n subsets).
pub const GREENE_MAX_N: usize = 16;

/// Greene invariants of a permutation: `increasing[i - 1]` is the largest
/// union of `i` increasing subsequences, `decreasing` likewise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreeneReport {
    pub sigma: Vec<usize>,
    pub increasing: Vec<usize>,
    pub decreasing: Vec<usize>,
}

/// Which family of monotone subsequences to take unions of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Increasing,
    Decreasing,
}

/// Maximal size of a union of `i` monotone subsequences of the given family.
///
/// A subset is such a union iff its restriction has no monotone subsequence of
/// the opposite direction of length `i + 1` (Mirsky's dual of Dilworth's
/// theorem), so the scan keeps the largest subset whose opposite run is at
/// most `i`.
pub fn greene_bruteforce(p: &Permutation, i: usize, family: Family) -> Result<usize> {
    let report = greene_report(p)?;
    let values = match family {
        Family::Increasing => &report.increasing,
        Family::Decreasing => &report.decreasing,
    };
    Ok(if i == 0 {
        0
    } else {
        values.get(i - 1).copied().unwrap_or(p.len())
    })
}

/// All Greene invariants `i = 1..=n` in one scan over subsets.
pub fn greene_report(p: &Permutation) -> Result<GreeneReport> {
    let n = p.len();
    if n > GREENE_MAX_N {
        return Err(Error::TooLarge { n, limit: GREENE_MAX_N });
    }
    let images = p.images();
    // best_inc[d] = largest subset whose longest decreasing run is exactly d
    let mut best_inc = vec![0usize; n + 1];
    let mut best_dec = vec![0usize; n + 1];
    let mut buf = Vec::with_capacity(n);
    for mask in 0u32..(1u32 << n) {
        buf.clear();
        buf.extend((0..n).filter(|&k| mask >> k & 1 == 1).map(|k| images[k]));
        let size = buf.len();
        let dec = lis_of(buf.iter().rev().copied());
        let inc = lis_of(buf.iter().copied());
        best_inc[dec] = best_inc[dec].max(size);
        best_dec[inc] = best_dec[inc].max(size);
    }
    let running_max = |best: &[usize]| -> Vec<usize> {
        let mut acc = best[0];
        (1..=n)
            .map(|i| {
                acc = acc.max(best[i]);
                acc
            })
            .collect()
    };
    Ok(GreeneReport {
        sigma: p.word(),
        increasing: running_max(&best_inc),
        decreasing: running_max(&best_dec),
    })
}

/// Direct definition: the largest union of `i` explicit monotone subsequences,
/// built by closing the set of monotone subsets under pairwise union. Only
/// meant to validate [`greene_bruteforce`] on small inputs.
pub fn greene_by_unions(p: &Permutation, i: usize, family: Family) -> Result<usize> {
    let n = p.len();
    if n > 12 {
        return Err(Error::TooLarge { n, limit: 12 });
    }
    let images = p.images();
    let full = 1usize << n;
    let monotone: Vec<usize> = (0..full)
        .filter(|&mask| {
            let vals: Vec<u32> = (0..n).filter(|&k| mask >> k & 1 == 1).map(|k| images[k]).collect();
            vals.windows(2).all(|w| match family {
                Family::Increasing => w[0] < w[1],
                Family::Decreasing => w[0] > w[1],
            })
        })
        .collect();
    let mut reachable = vec![false; full];
    reachable[0] = true;
    for _ in 0..i {
        let mut next = vec![false; full];
        for (u, _) in reachable.iter().enumerate().filter(|(_, &r)| r) {
            for &v in &monotone {
                next[u | v] = true;
            }
        }
        reachable = next;
    }
    Ok(reachable
        .iter()
        .enumerate()
        .filter(|(_, &r)| r)
        .map(|(mask, _)| mask.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// `L_λ(t)` read off the corner polyline through `(i, λ_i), (i, λ_{i+1})`
/// (`λ_0 = ∞`), where lattice point `(α, β)` sits at diagonal `β - α` and
/// height `α + β`.
pub fn corner_height(d: &YoungDiagram, t: i64) -> i64 {
    let vertices = corner_vertices(d);
    // vertices run from large t to small t; the first leg (0, ∞)→(0, λ_1)
    // is the line L = t
    let (t0, _) = vertices[0];
    if t >= t0 {
        return t;
    }
    for w in vertices.windows(2) {
        let ((ta, ha), (tb, hb)) = (w[0], w[1]);
        if t <= ta && t >= tb {
            // legs have slope ±1 in (t, L)
            let slope = if ta == tb { 0 } else { (ha - hb) / (ta - tb) };
            return ha - slope * (ta - t);
        }
    }
    // past the last row the curve runs along (i, 0): L = -t
    -t
}

fn corner_vertices(d: &YoungDiagram) -> Vec<(i64, i64)> {
    let to_point = |alpha: usize, beta: usize| (beta as i64 - alpha as i64, (alpha + beta) as i64);
    let mut out = vec![to_point(0, d.first_part())];
    for i in 1..=d.num_rows() {
        out.push(to_point(i, d.part(i)));
        out.push(to_point(i, d.part(i + 1)));
    }
    out
}

/// Every lattice point `(α, β)` of the corner polyline satisfies
/// `λ_{α+1} <= β <= λ_α` (`λ_0 = ∞`). Returns the first offending point.
pub fn check_lattice_points(d: &YoungDiagram) -> Option<(usize, usize)> {
    let rows = d.num_rows();
    let mut points = Vec::new();
    for alpha in 0..=rows {
        // vertical leg at α from λ_α down to λ_{α+1} (λ_0 capped at λ_1)
        let top = if alpha == 0 { d.first_part() } else { d.part(alpha) };
        for beta in d.part(alpha + 1)..=top {
            points.push((alpha, beta));
        }
    }
    points.into_iter().find(|&(alpha, beta)| {
        let upper = if alpha == 0 { usize::MAX } else { d.part(alpha) };
        !(d.part(alpha + 1) <= beta && beta <= upper)
    })
}

/// Which inequality relating `λ(σ)` to `λ(τ)` failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inequality {
    /// `#₁(σ) <= λ_1(σ)`
    FirstRowLower,
    /// `λ_1(σ) <= #₁(σ) + λ_1(τ)`
    FirstRowUpper,
    /// `#₁(σ) + Σ_{j<i} λ_j(τ) <= Σ_{j<=i} λ_j(σ)`
    PartialSumLower,
    /// `Σ_{j<=i} λ_j(σ) <= #₁(σ) + Σ_{j<=i} λ_j(τ)`
    PartialSumUpper,
    /// `|Σ_{k=2}^{i} (λ_k(σ) - λ_k(τ))| <= λ_1(τ)`
    TailDrift,
    /// `ℓ(λ(τ)) <= ℓ(λ(σ))`
    RowsLower,
    /// `ℓ(λ(σ)) <= ℓ(λ(τ)) + 1`
    RowsUpper,
}

/// A falsified inequality with the data needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma15Violation {
    pub inequality: Inequality,
    pub index: usize,
    pub lhs: i64,
    pub rhs: i64,
    pub sigma: Vec<usize>,
}

/// Checks the fixed-point inequalities between `λ(σ)` and `λ(τ)` for every
/// index, where `σ = (fix(σ), τ)`.
pub fn verify_lemma15(p: &Permutation) -> Result<(), Lemma15Violation> {
    let split = p.remove_fixed_points();
    let sigma = schensted_shape(p);
    let tau = schensted_shape(&split.reduced);
    let fixed = split.fixed_set.len() as i64;
    let fail = |inequality, index, lhs: i64, rhs: i64| {
        if lhs <= rhs {
            Ok(())
        } else {
            Err(Lemma15Violation {
                inequality,
                index,
                lhs,
                rhs,
                sigma: p.word(),
            })
        }
    };
    let s = |i: usize| sigma.partial_sum(i) as i64;
    let t = |i: usize| tau.partial_sum(i) as i64;

    fail(Inequality::FirstRowLower, 1, fixed, s(1))?;
    fail(Inequality::FirstRowUpper, 1, s(1), fixed + t(1))?;
    let last = sigma.num_rows().max(tau.num_rows()) + 1;
    for i in 2..=last {
        fail(Inequality::PartialSumLower, i, fixed + t(i - 1), s(i))?;
        fail(Inequality::PartialSumUpper, i, s(i), fixed + t(i))?;
        let drift = (s(i) - s(1)) - (t(i) - t(1));
        fail(Inequality::TailDrift, i, drift.abs(), t(1))?;
    }
    let (rows_s, rows_t) = (sigma.num_rows() as i64, tau.num_rows() as i64);
    fail(Inequality::RowsLower, 0, rows_t, rows_s)?;
    fail(Inequality::RowsUpper, 0, rows_s, rows_t + 1)?;
    Ok(())
}

/// Outcome of comparing the profile distance with its partial-sum bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma34Report {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub holds: bool,
    pub distance: f64,
    pub bound: f64,
    pub slack: f64,
    /// First `l` whose term dominates the distance (exact comparison).
    pub witness_l: Option<usize>,
}

pub fn verify_lemma34(a: &YoungDiagram, b: &YoungDiagram) -> Lemma34Report {
    let distance = geom::sup_profile_distance(a, b);
    let bound = geom::lemma34_bound(a, b);
    let witness_l = geom::lemma34_witness(a, b);
    Lemma34Report {
        a: a.parts().to_vec(),
        b: b.parts().to_vec(),
        holds: witness_l.is_some(),
        distance,
        bound,
        slack: bound - distance,
        witness_l,
    }
}
