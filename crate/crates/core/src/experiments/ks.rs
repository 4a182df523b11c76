//! Kolmogorov–Smirnov distances.

use std::io::Read;

use crate::error::{Error, Result};

fn sorted(xs: &[f64]) -> Result<Vec<f64>> {
    if xs.is_empty() {
        return Err(Error::EmptySample);
    }
    if xs.iter().any(|x| x.is_nan()) {
        return Err(Error::InvalidParameter("NaN in sample".into()));
    }
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// `sup_x |F_x(x) - F_y(x)|` between the two empirical CDFs.
pub fn ks_two_sample(x: &[f64], y: &[f64]) -> Result<f64> {
    let (x, y) = (sorted(x)?, sorted(y)?);
    let (nx, ny) = (x.len() as u128, y.len() as u128);
    let (mut i, mut j) = (0, 0);
    let mut d = 0u128;
    // step both CDFs past every copy of the next smallest value, then compare
    while i < x.len() && j < y.len() {
        let v = x[i].min(y[j]);
        while i < x.len() && x[i] <= v {
            i += 1;
        }
        while j < y.len() && y[j] <= v {
            j += 1;
        }
        // exact in integers: |i/nx - j/ny| = |i ny - j nx| / (nx ny)
        d = d.max((i as u128 * ny).abs_diff(j as u128 * nx));
    }
    Ok(d as f64 / (nx * ny) as f64)
}

/// A tabulated reference CDF, e.g. a Tracy–Widom table, as `x,F(x)` rows.
#[derive(Clone, Debug, PartialEq)]
pub struct CdfTable {
    points: Vec<(f64, f64)>,
}

impl CdfTable {
    /// Requires strictly increasing `x` and nondecreasing `F` in `[0, 1]`.
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidParameter("CDF table needs two or more rows".into()));
        }
        for w in points.windows(2) {
            if !(w[0].0 < w[1].0 && w[0].1 <= w[1].1) {
                return Err(Error::InvalidParameter(format!(
                    "CDF table not monotone near x = {}",
                    w[1].0
                )));
            }
        }
        if points.iter().any(|&(_, f)| !(0.0..=1.0).contains(&f)) {
            return Err(Error::InvalidParameter("CDF value outside [0, 1]".into()));
        }
        Ok(Self { points })
    }

    /// Reads `x,F(x)` rows; a non-numeric first row is taken as a header.
    pub fn from_csv<R: Read>(input: R) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(input);
        let mut points = Vec::new();
        for (k, row) in reader.records().enumerate() {
            let row = row?;
            let parse = |i: usize| row.get(i).and_then(|v| v.parse::<f64>().ok());
            match (parse(0), parse(1)) {
                (Some(x), Some(f)) => points.push((x, f)),
                _ if k == 0 => continue,
                _ => return Err(Error::Parse(format!("bad CDF row {}", k + 1))),
            }
        }
        Self::new(points)
    }

    /// Linear interpolation, clamped to the end values outside the table.
    pub fn cdf(&self, x: f64) -> f64 {
        let first = self.points[0];
        let last = self.points[self.points.len() - 1];
        if x <= first.0 {
            return first.1;
        }
        if x >= last.0 {
            return last.1;
        }
        let k = self.points.partition_point(|&(px, _)| px <= x);
        let ((x0, f0), (x1, f1)) = (self.points[k - 1], self.points[k]);
        f0 + (f1 - f0) * (x - x0) / (x1 - x0)
    }
}

/// One-sample KS distance between a sample and a tabulated CDF.
pub fn ks_against_table(sample: &[f64], table: &CdfTable) -> Result<f64> {
    let x = sorted(sample)?;
    let n = x.len() as f64;
    let mut d = 0.0f64;
    for (i, &v) in x.iter().enumerate() {
        let f = table.cdf(v);
        d = d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n);
    }
    Ok(d)
}
