use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the parts. Use
/// [`Partition::display_cmp`] for the dominance-compatible listing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros, so any multiset of non-negative parts is accepted.
    pub fn from_parts_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The rectangle `(m^n)`; empty when either side is zero.
    pub fn rectangle(m: u32, n: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition(vec![m; n as usize])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let parts = (0..width)
            .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Componentwise sum, padding the shorter side with zeros.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// `self ⊵ other` in dominance order. Partitions of different sizes never compare.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Listing order: larger size first, then lexicographically descending.
    /// Within one size this is a linear extension of dominance, largest first.
    pub fn display_cmp(&self, other: &Partition) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| other.0.cmp(&self.0))
    }

    /// Multiplicity of each part value, indexed by value (`counts[k]` = number of parts equal to k).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.first() as usize + 1];
        for &p in &self.0 {
            counts[p as usize] += 1;
        }
        counts
    }

    /// Scales every part by `k`.
    pub fn scale(&self, k: u32) -> Partition {
        Partition::from_parts_unsorted(self.0.iter().map(|p| p * k).collect())
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_parts_unsorted(parts)
    }

    /// Removes the first part, keeping the rest.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    /// `(m, m, ..., m)` with `n` entries.
    pub fn rectangular(m: u32, n: u32) -> Self {
        Composition(vec![m; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Composition {
        let mut parts = self.0.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition(parts)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().to_vec())
    }
}

/// All partitions of `n`, lexicographically descending (so `(n)` first and `(1^n)` last).
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` with every part at most `max_part`, lexicographically descending.
pub fn partitions_bounded(n: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, max_part.min(n), &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}
