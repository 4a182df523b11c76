//! Permutations in one-line notation, cycle statistics and fixed-point surgery.
//!
//! Public input and output is 1-based (`"5 3 2 1 4 6"` maps 1 to 5); the word
//! is stored 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, .., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u32>,
}

/// Cycle-derived statistics of a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CycleStats {
    pub n: usize,
    /// Number of cycles, fixed points included.
    pub num_cycles: usize,
    pub fixed_points: usize,
    pub two_cycles: usize,
    /// Fixed points of the square: `fixed_points + 2 * two_cycles`.
    pub fixed_points_of_square: usize,
}

/// The decomposition of a permutation into its fixed points and the
/// fixed-point-free permutation left after deleting them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedPointSplit {
    /// Sorted 1-based positions `i` with `p(i) = i`.
    pub fixed_set: Vec<usize>,
    /// The restriction to the remaining positions, relabeled order-preservingly
    /// onto `{1, .., n - |fixed_set|}`.
    pub reduced: Permutation,
}

impl Permutation {
    /// Builds a permutation from a 1-based word, checking bijectivity.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut images = Vec::with_capacity(n);
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            images.push((v - 1) as u32);
        }
        Self::from_zero_based(images)
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_zero_based(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n > u32::MAX as usize {
            return Err(Error::InvalidPermutation(format!("size {n} too large")));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v >= n {
                return Err(Error::InvalidPermutation(format!("value {} outside 1..={n}", v + 1)));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {} repeated", v + 1)));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    /// Caller guarantees `images` is a bijection of `0..len`.
    pub(crate) fn from_zero_based_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_zero_based(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based images: `images()[i] = p(i + 1) - 1`.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// The 1-based one-line word.
    pub fn word(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// `p(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Self { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_sizes(self.len(), other.len())?;
        let images = other.images.iter().map(|&v| self.images[v as usize]).collect();
        Ok(Self { images })
    }

    pub fn square(&self) -> Self {
        let images = self.images.iter().map(|&v| self.images[v as usize]).collect();
        Self { images }
    }

    /// `r ∘ self ∘ r⁻¹`, which satisfies `(r self r⁻¹)(r(i)) = r(self(i))`.
    pub fn conjugate(&self, r: &Self) -> Result<Self> {
        check_sizes(self.len(), r.len())?;
        let mut images = vec![0u32; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[r.images[i] as usize] = r.images[v as usize];
        }
        Ok(Self { images })
    }

    /// The word read right to left (not a group operation).
    pub fn reversed(&self) -> Self {
        let mut images = self.images.clone();
        images.reverse();
        Self { images }
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| self.images[v as usize] as usize == i)
    }

    /// Single pass over the cycle decomposition.
    pub fn cycle_stats(&self) -> CycleStats {
        let n = self.len();
        let mut visited = vec![false; n];
        let mut stats = CycleStats {
            n,
            num_cycles: 0,
            fixed_points: 0,
            two_cycles: 0,
            fixed_points_of_square: 0,
        };
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0usize;
            let mut j = start;
            while !visited[j] {
                visited[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            stats.num_cycles += 1;
            match len {
                1 => stats.fixed_points += 1,
                2 => stats.two_cycles += 1,
                _ => {}
            }
        }
        stats.fixed_points_of_square = stats.fixed_points + 2 * stats.two_cycles;
        stats
    }

    /// Deletes the fixed points and relabels the rest order-preservingly.
    pub fn remove_fixed_points(&self) -> FixedPointSplit {
        let n = self.len();
        // rank[i] = new 0-based label of a non-fixed position i
        let mut rank = vec![u32::MAX; n];
        let mut fixed_set = Vec::new();
        let mut next = 0u32;
        for (i, &v) in self.images.iter().enumerate() {
            if v as usize == i {
                fixed_set.push(i + 1);
            } else {
                rank[i] = next;
                next += 1;
            }
        }
        // non-fixed positions map to non-fixed values, so ranks are defined
        let images = self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v as usize != i)
            .map(|(_, &v)| rank[v as usize])
            .collect();
        FixedPointSplit {
            fixed_set,
            reduced: Self::from_zero_based_unchecked(images),
        }
    }
}

impl FixedPointSplit {
    /// Re-inserts the fixed points, inverting [`Permutation::remove_fixed_points`].
    pub fn reconstruct(&self) -> Result<Permutation> {
        let n = self.fixed_set.len() + self.reduced.len();
        let mut is_fixed = vec![false; n];
        for &f in &self.fixed_set {
            if f == 0 || f > n || is_fixed[f - 1] {
                return Err(Error::InvalidPermutation(format!("bad fixed position {f}")));
            }
            is_fixed[f - 1] = true;
        }
        let unlabel: Vec<u32> = (0..n as u32).filter(|&i| !is_fixed[i as usize]).collect();
        let mut images: Vec<u32> = (0..n as u32).collect();
        for (k, &v) in self.reduced.images.iter().enumerate() {
            images[unlabel[k] as usize] = unlabel[v as usize];
        }
        Ok(Permutation::from_zero_based_unchecked(images))
    }
}

fn check_sizes(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Self::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word()
    }
}
