use std::io::{Read, Write};

use crate::error::{Error, Result};

/// Version tag written in the first column of every record row.
pub const SCHEMA_VERSION: u32 = 1;

const COLUMNS: &[&str] = &[
    "schema_version",
    "n",
    "trial_index",
    "fix_target",
    "fix_count",
    "num_cycles",
    "two_cycles",
    "fixed_points_of_square",
    "d_n",
    "ell",
    "lambda1",
    "lambda2",
];

/// Measurements from one sampled permutation. Unrequested measurements are
/// `None` and written as empty cells.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub n: usize,
    pub trial_index: u64,
    /// Planted fixed-point count before parity repair (composite regimes).
    pub fix_target: Option<usize>,
    /// Fixed points actually present, `#₁(σ)`.
    pub fix_count: usize,
    pub num_cycles: Option<usize>,
    pub two_cycles: Option<usize>,
    pub fixed_points_of_square: Option<usize>,
    /// Sup distance to the limit curve.
    pub d_n: Option<f64>,
    /// Number of rows `ℓ(λ)`, the longest decreasing subsequence.
    pub ell: Option<usize>,
    pub lambda1: Option<usize>,
    pub lambda2: Option<usize>,
    /// Seconds spent sampling and measuring.
    pub wall_time: f64,
}

impl TrialRecord {
    /// Ordering key used for canonical output.
    pub fn key(&self) -> (usize, u64) {
        (self.n, self.trial_index)
    }

    /// Shape invariants: `ℓ >= 1` for `n >= 1`, `λ_1 >= λ_2`, `λ_1 ℓ >= n`.
    pub fn check(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParameter(format!("record {:?}: {what}", self.key())));
        if let Some(ell) = self.ell {
            if self.n >= 1 && ell == 0 {
                return bad("ell = 0");
            }
        }
        if let (Some(l1), Some(l2)) = (self.lambda1, self.lambda2) {
            if l1 < l2 {
                return bad("lambda1 < lambda2");
            }
        }
        if let (Some(l1), Some(ell)) = (self.lambda1, self.ell) {
            if l1 * ell < self.n {
                return bad("lambda1 * ell < n");
            }
        }
        Ok(())
    }
}

/// Streams records as CSV rows under a fixed header.
pub struct RecordWriter<W: Write> {
    out: csv::Writer<W>,
    wall_time: bool,
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl<W: Write> RecordWriter<W> {
    /// With `wall_time` the rows gain a trailing `wall_time` column, which
    /// makes the output timing-dependent.
    pub fn new(out: W, wall_time: bool) -> Result<Self> {
        let mut out = csv::Writer::from_writer(out);
        let mut header: Vec<&str> = COLUMNS.to_vec();
        if wall_time {
            header.push("wall_time");
        }
        out.write_record(&header)?;
        Ok(Self { out, wall_time })
    }

    pub fn write(&mut self, r: &TrialRecord) -> Result<()> {
        let mut row = vec![
            SCHEMA_VERSION.to_string(),
            r.n.to_string(),
            r.trial_index.to_string(),
            cell(r.fix_target),
            r.fix_count.to_string(),
            cell(r.num_cycles),
            cell(r.two_cycles),
            cell(r.fixed_points_of_square),
            cell(r.d_n),
            cell(r.ell),
            cell(r.lambda1),
            cell(r.lambda2),
        ];
        if self.wall_time {
            row.push(r.wall_time.to_string());
        }
        self.out.write_record(&row)?;
        self.out.flush()?;
        Ok(())
    }

    pub fn into_inner(self) -> Result<W> {
        self.out
            .into_inner()
            .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))
    }
}

/// Reads records written by [`RecordWriter`] (with or without timing).
pub fn read_records<R: Read>(input: R) -> Result<Vec<TrialRecord>> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers()?.clone();
    let col = |name: &str| header.iter().position(|h| h == name);
    for name in COLUMNS {
        if col(name).is_none() {
            return Err(Error::Parse(format!("record file lacks column {name}")));
        }
    }
    let idx = |name: &str| col(name).expect("checked above");
    let wall = col("wall_time");
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row?;
        let field = |name: &str| row.get(idx(name)).unwrap_or("");
        let opt = |name: &str| -> Result<Option<usize>> {
            let v = field(name);
            if v.is_empty() {
                Ok(None)
            } else {
                v.parse().map(Some).map_err(|_| Error::Parse(format!("{name} = {v:?}")))
            }
        };
        let req = |name: &str| -> Result<usize> { opt(name)?.ok_or_else(|| Error::Parse(format!("missing {name}"))) };
        let version = field("schema_version");
        if version != SCHEMA_VERSION.to_string() {
            return Err(Error::Parse(format!("unsupported schema_version {version:?}")));
        }
        let d_n = match field("d_n") {
            "" => None,
            v => Some(v.parse().map_err(|_| Error::Parse(format!("d_n = {v:?}")))?),
        };
        let wall_time = match wall.and_then(|w| row.get(w)) {
            None | Some("") => 0.0,
            Some(v) => v.parse().map_err(|_| Error::Parse(format!("wall_time = {v:?}")))?,
        };
        out.push(TrialRecord {
            n: req("n")?,
            trial_index: req("trial_index")? as u64,
            fix_target: opt("fix_target")?,
            fix_count: req("fix_count")?,
            num_cycles: opt("num_cycles")?,
            two_cycles: opt("two_cycles")?,
            fixed_points_of_square: opt("fixed_points_of_square")?,
            d_n,
            ell: opt("ell")?,
            lambda1: opt("lambda1")?,
            lambda2: opt("lambda2")?,
            wall_time,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TrialRecord {
        TrialRecord {
            n: 6,
            trial_index: 2,
            fix_target: None,
            fix_count: 1,
            num_cycles: Some(3),
            two_cycles: Some(1),
            fixed_points_of_square: Some(3),
            d_n: Some(0.125),
            ell: Some(4),
            lambda1: Some(3),
            lambda2: None,
            wall_time: 0.5,
        }
    }

    #[test]
    fn csv_layout() {
        let mut w = RecordWriter::new(Vec::new(), false).unwrap();
        w.write(&sample()).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(
            text,
            "schema_version,n,trial_index,fix_target,fix_count,num_cycles,two_cycles,\
             fixed_points_of_square,d_n,ell,lambda1,lambda2\n1,6,2,,1,3,1,3,0.125,4,3,\n"
        );
        let mut back = read_records(text.as_bytes()).unwrap();
        back[0].wall_time = 0.5;
        assert_eq!(back, vec![sample()]);
    }

    #[test]
    fn timing_column_is_optional() {
        let mut w = RecordWriter::new(Vec::new(), true).unwrap();
        w.write(&sample()).unwrap();
        let bytes = w.into_inner().unwrap();
        assert_eq!(read_records(&bytes[..]).unwrap(), vec![sample()]);
    }

    #[test]
    fn record_checks() {
        assert!(sample().check().is_ok());
        let mut r = sample();
        r.lambda1 = Some(1);
        assert!(r.check().is_err());
        let mut r = sample();
        r.lambda2 = Some(5);
        assert!(r.check().is_err());
    }

    #[test]
    fn rejects_unknown_schema() {
        let text = "schema_version,n,trial_index,fix_target,fix_count,num_cycles,two_cycles,\
                    fixed_points_of_square,d_n,ell,lambda1,lambda2\n9,6,2,,1,3,1,3,0.125,4,3,\n";
        assert!(read_records(text.as_bytes()).is_err());
    }
}
