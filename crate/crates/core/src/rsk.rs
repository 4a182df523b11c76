//! The Robinson–Schensted shape map and monotone subsequences.
//!
//! Only the shape of the insertion tableau is tracked; the recording tableau
//! is never built.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An integer partition drawn as a Young diagram (English rows, longest first).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    /// Validates that parts are weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "parts increase from {} to {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidDiagram("zero part before a positive one".into()));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows, `ℓ(λ)`.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// `λ_i` with 1-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_part(&self) -> usize {
        self.part(1)
    }

    /// `λ_1 + .. + λ_i`.
    pub fn partial_sum(&self, i: usize) -> usize {
        self.parts.iter().take(i).sum()
    }

    /// The transposed diagram `λ'`.
    pub fn conjugate(&self) -> Self {
        let cols = self.first_part();
        let mut conj = vec![0usize; cols];
        // row lengths are decreasing, so each row fills a prefix of columns
        for &len in &self.parts {
            for c in conj.iter_mut().take(len) {
                *c += 1;
            }
        }
        Self { parts: conj }
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Comma-separated parts, e.g. `"3,1,1,1"`; the empty string is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad diagram part {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(d: YoungDiagram) -> Self {
        d.parts
    }
}

/// Shape of the insertion tableau under Schensted row insertion of the word.
pub fn schensted_shape(p: &Permutation) -> YoungDiagram {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &value in p.images() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let row = &mut rows[r];
            // entries are distinct, so this is the first entry larger than x
            let pos = row.partition_point(|&y| y < x);
            if pos == row.len() {
                row.push(x);
                break;
            }
            x = std::mem::replace(&mut row[pos], x);
            r += 1;
        }
    }
    YoungDiagram {
        parts: rows.iter().map(Vec::len).collect(),
    }
}

/// Longest increasing subsequence length (patience sorting).
pub fn lis(p: &Permutation) -> usize {
    lis_of(p.images().iter().copied())
}

/// Longest decreasing subsequence length.
pub fn lds(p: &Permutation) -> usize {
    lis_of(p.images().iter().rev().copied())
}

/// Patience sorting over an arbitrary sequence of distinct values.
pub(crate) fn lis_of(values: impl IntoIterator<Item = u32>) -> usize {
    // tops[k] = smallest possible tail of an increasing run of length k + 1
    let mut tops: Vec<u32> = Vec::new();
    for x in values {
        let pos = tops.partition_point(|&y| y < x);
        if pos == tops.len() {
            tops.push(x);
        } else {
            tops[pos] = x;
        }
    }
    tops.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn diagram(parts: &[usize]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shape_examples() {
        let p = perm(&[5, 3, 2, 1, 4, 6]);
        assert_eq!(schensted_shape(&p), diagram(&[3, 1, 1, 1]));
        assert_eq!(schensted_shape(&Permutation::identity(7)), diagram(&[7]));
        let rev = Permutation::identity(7).reversed();
        assert_eq!(schensted_shape(&rev), diagram(&[1; 7]));
        assert_eq!(schensted_shape(&Permutation::identity(0)), YoungDiagram::empty());
    }

    #[test]
    fn lis_lds_examples() {
        let p = perm(&[5, 3, 2, 1, 4, 6]);
        assert_eq!(lis(&p), 3);
        assert_eq!(lds(&p), 4);
        assert_eq!(lis(&Permutation::identity(9)), 9);
        assert_eq!(lds(&Permutation::identity(9)), 1);
        assert_eq!(lis(&Permutation::identity(0)), 0);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(diagram(&[3, 1, 1, 1]).conjugate(), diagram(&[4, 1, 1]));
        assert_eq!(diagram(&[5]).conjugate(), diagram(&[1; 5]));
        assert_eq!(YoungDiagram::empty().conjugate(), YoungDiagram::empty());
    }

    #[test]
    fn diagram_validation_and_text() {
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert!(YoungDiagram::new(vec![2, 0, 1]).is_err());
        assert_eq!(diagram(&[7, 5, 2, 1, 1, 0]).parts(), &[7, 5, 2, 1, 1]);
        let d: YoungDiagram = "3,1,1,1".parse().unwrap();
        assert_eq!(d, diagram(&[3, 1, 1, 1]));
        assert_eq!(d.to_string(), "3,1,1,1");
        assert_eq!(d.size(), 6);
        assert_eq!(d.part(5), 0);
        assert_eq!(d.partial_sum(2), 4);
        assert_eq!("".parse::<YoungDiagram>().unwrap(), YoungDiagram::empty());
        assert!("3,a".parse::<YoungDiagram>().is_err());
    }
}
