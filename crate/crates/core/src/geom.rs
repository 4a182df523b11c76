//! Height profiles of Young diagrams in rotated ("Russian") coordinates and
//! their distance to the limit curve.
//!
//! Canonical units are integer ones: cell `(i, j)` (row `i`, column `j`,
//! 1-based) sits on diagonal `t = j - i`, and the profile `L(t)` is
//! `|t| + 2 * #cells on diagonal t` at integer `t`, linear in between. The
//! first row therefore reaches out to `t = λ_1` and the first column to
//! `t = -λ'_1`.
//!
//! The other common convention draws cells with unit side, so kinks sit on
//! `(√2/2)ℤ`. The two are related by `L_int(t) = √2 · L_unit(t / √2)`;
//! [`unit_height`] evaluates the latter. Under this map
//! `L_int(2s√n) / (2√n) = L_unit(s√(2n)) / √(2n)`, so both scalings of the
//! limit-shape statement describe the same object.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_2_PI, SQRT_2};
use std::io::Write;

use crate::error::{Error, Result};
use crate::rsk::YoungDiagram;

/// The profile of a diagram, evaluated on demand.
#[derive(Clone, Debug)]
pub struct HeightProfile {
    diagram: YoungDiagram,
    conjugate: YoungDiagram,
}

impl HeightProfile {
    pub fn new(diagram: YoungDiagram) -> Self {
        let conjugate = diagram.conjugate();
        Self { diagram, conjugate }
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    /// `L(t)` at an integer diagonal.
    pub fn at(&self, t: i64) -> i64 {
        let cells = if t >= 0 {
            diagonal_cells(self.diagram.parts(), t as usize)
        } else {
            diagonal_cells(self.conjugate.parts(), t.unsigned_abs() as usize)
        };
        t.abs() + 2 * cells as i64
    }

    /// `L` at a real argument, interpolating linearly between diagonals.
    pub fn at_real(&self, t: f64) -> f64 {
        let lo = t.floor();
        let frac = t - lo;
        let a = self.at(lo as i64) as f64;
        if frac == 0.0 {
            return a;
        }
        let b = self.at(lo as i64 + 1) as f64;
        a + frac * (b - a)
    }

    /// Diagonals outside `[-λ'_1, λ_1]` satisfy `L(t) = |t|`.
    pub fn support(&self) -> (i64, i64) {
        (-(self.diagram.num_rows() as i64), self.diagram.first_part() as i64)
    }

    /// Writes `t,L(t)` rows over the support window.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "t,L")?;
        let (lo, hi) = self.support();
        for t in lo..=hi {
            writeln!(out, "{t},{}", self.at(t))?;
        }
        Ok(())
    }
}

/// Number of cells `(i, j)` with `j - i = t`, `t >= 0`. Since `λ_i - i` is
/// strictly decreasing this is the length of the prefix with `λ_i - i >= t`.
fn diagonal_cells(parts: &[usize], t: usize) -> usize {
    let (mut lo, mut hi) = (0, parts.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if parts[mid] > t + mid {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Exact `L_λ(t)` in integer units.
pub fn height_at(d: &YoungDiagram, t: i64) -> i64 {
    HeightProfile::new(d.clone()).at(t)
}

/// `L_λ(x)` in unit-cell coordinates (kinks on `(√2/2)ℤ`).
pub fn unit_height(profile: &HeightProfile, x: f64) -> f64 {
    profile.at_real(x * SQRT_2) * FRAC_1_SQRT_2
}

/// The Vershik–Kerov–Logan–Shepp curve.
pub fn omega(s: f64) -> f64 {
    if s.abs() >= 1.0 {
        s.abs()
    } else {
        FRAC_2_PI * (s * s.asin() + (1.0 - s * s).sqrt())
    }
}

/// Limit profile for a diagram of `n` cells of which a fraction `p` sits in
/// the fixed-point row: `c · Ω(s / c)` with `c = √(1 - p)`, which is the
/// profile of a Plancherel-like diagram with `(1 - p)n` cells measured in
/// units of `2√n`. For `p = 1` this degenerates to `|s|`.
pub fn scaled_omega(s: f64, p: f64) -> f64 {
    let c = (1.0 - p).max(0.0).sqrt();
    if c == 0.0 {
        s.abs()
    } else {
        c * omega(s / c)
    }
}

/// `(1 / 2√n) · L(2s√n)`.
pub fn scaled_height(profile: &HeightProfile, n: usize, s: f64) -> f64 {
    let scale = 2.0 * (n as f64).sqrt();
    profile.at_real(s * scale) / scale
}

/// Same quantity through the unit-cell convention: `(1 / √(2n)) · L_unit(s√(2n))`.
pub fn scaled_unit_height(profile: &HeightProfile, n: usize, s: f64) -> f64 {
    let scale = (2.0 * n as f64).sqrt();
    unit_height(profile, s * scale) / scale
}

fn check_scaled_args(d: &YoungDiagram, n: usize, m: usize) -> Result<()> {
    if d.size() != n {
        return Err(Error::SizeMismatch {
            left: d.size(),
            right: n,
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if m > n {
        return Err(Error::InvalidParameter(format!(
            "fixed-point count {m} exceeds n = {n}"
        )));
    }
    Ok(())
}

/// Sup over `s` of `|(1/2√n) L(2s√n) - c Ω(s/c)|`, `c = √(1 - m/n)`.
///
/// Evaluated at every integer diagonal and half-integer midpoint in the window
/// `|t| <= max(λ_1, λ'_1) + 2√n`. Between consecutive diagonals the scaled
/// profile has slope ±1 while the limit curve has slope in `[-1, 1]`, so the
/// difference is monotone there and the grid maximum is the exact sup.
/// Outside the window both sides equal `|s|`.
pub fn scaled_sup_distance(d: &YoungDiagram, n: usize, m: usize) -> Result<f64> {
    check_scaled_args(d, n, m)?;
    let profile = HeightProfile::new(d.clone());
    let p = m as f64 / n as f64;
    let scale = 2.0 * (n as f64).sqrt();
    let reach = d.first_part().max(d.num_rows()) as i64 + scale.ceil() as i64;
    let mut sup = 0.0f64;
    let mut prev = profile.at(-reach - 1) as f64;
    for t in -reach..=reach {
        let here = profile.at(t) as f64;
        let mid = 0.5 * (prev + here);
        let s_mid = (t as f64 - 0.5) / scale;
        let s = t as f64 / scale;
        sup = sup
            .max((mid / scale - scaled_omega(s_mid, p)).abs())
            .max((here / scale - scaled_omega(s, p)).abs());
        prev = here;
    }
    Ok(sup)
}

/// Writes `s,F_n,Phi_p` rows on the same grid as [`scaled_sup_distance`].
pub fn write_scaled_csv<W: Write>(d: &YoungDiagram, n: usize, m: usize, mut out: W) -> Result<()> {
    check_scaled_args(d, n, m)?;
    let profile = HeightProfile::new(d.clone());
    let p = m as f64 / n as f64;
    let scale = 2.0 * (n as f64).sqrt();
    let reach = d.first_part().max(d.num_rows()) as i64 + scale.ceil() as i64;
    writeln!(out, "s,F_n,Phi_p")?;
    for t in -reach..=reach {
        let s = t as f64 / scale;
        writeln!(out, "{s},{},{}", profile.at(t) as f64 / scale, scaled_omega(s, p))?;
    }
    Ok(())
}

/// `max_t |L_a(t) - L_b(t)|` over integer diagonals, in integer units.
/// Always even, since both profiles have the parity of `t`.
pub fn max_height_gap(a: &YoungDiagram, b: &YoungDiagram) -> u64 {
    let pa = HeightProfile::new(a.clone());
    let pb = HeightProfile::new(b.clone());
    let lo = a.num_rows().max(b.num_rows()) as i64;
    let hi = a.first_part().max(b.first_part()) as i64;
    (-lo..=hi)
        .map(|t| (pa.at(t) - pb.at(t)).unsigned_abs())
        .max()
        .unwrap_or(0)
}

/// `sup_s |L_a(s) - L_b(s)|` in unit-cell coordinates. Both profiles are
/// linear between common kinks, so the integer diagonals suffice.
pub fn sup_profile_distance(a: &YoungDiagram, b: &YoungDiagram) -> f64 {
    max_height_gap(a, b) as f64 / SQRT_2
}

/// `A_l = max_{m >= l+1} |Σ_{k=l+1}^{m} (a_k - b_k)|` for `l = 0..=rows`,
/// where `rows = max(ℓ(a), ℓ(b))`; the last entry is always 0.
pub fn tail_partial_sum_maxima(a: &YoungDiagram, b: &YoungDiagram) -> Vec<u64> {
    let rows = a.num_rows().max(b.num_rows());
    // prefix[m] = Σ_{k<=m} (a_k - b_k); constant for m >= rows
    let mut prefix = vec![0i64; rows + 1];
    for m in 1..=rows {
        prefix[m] = prefix[m - 1] + a.part(m) as i64 - b.part(m) as i64;
    }
    let mut out = vec![0u64; rows + 1];
    let (mut hi, mut lo) = (prefix[rows], prefix[rows]);
    for l in (0..rows).rev() {
        hi = hi.max(prefix[l + 1]);
        lo = lo.min(prefix[l + 1]);
        out[l] = (hi - prefix[l]).max(prefix[l] - lo) as u64;
    }
    out
}

/// `min_{l >= 0} 2√A_l + √2·l`.
pub fn lemma34_bound(a: &YoungDiagram, b: &YoungDiagram) -> f64 {
    tail_partial_sum_maxima(a, b)
        .iter()
        .enumerate()
        .map(|(l, &big_a)| 2.0 * (big_a as f64).sqrt() + SQRT_2 * l as f64)
        .fold(f64::INFINITY, f64::min)
}

/// Exact form of `sup_profile_distance(a, b) <= lemma34_bound(a, b)`.
///
/// With the gap written as `√2·k`, the term for `l` dominates iff `l >= k`
/// or `2·A_l >= (k - l)²`. Returns the first `l` that dominates.
pub fn lemma34_witness(a: &YoungDiagram, b: &YoungDiagram) -> Option<usize> {
    let k = max_height_gap(a, b) / 2;
    tail_partial_sum_maxima(a, b)
        .iter()
        .enumerate()
        .find(|&(l, &big_a)| {
            let l = l as u64;
            l >= k || 2 * big_a as u128 >= ((k - l) as u128).pow(2)
        })
        .map(|(l, _)| l)
}
