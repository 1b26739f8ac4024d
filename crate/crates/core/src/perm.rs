//! Permutations acting on the right, and signed sums over column groups.
//!
//! Points are `1..=degree`. Composition follows the right-action
//! convention: `i (πρ) = (iπ)ρ`, so [`Perm::then`] applies `self` first.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((1..=degree as u32).collect())
    }

    /// Builds a permutation from its image list `[1π, 2π, ...]`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x as usize] = true;
        }
        Ok(Perm(images))
    }

    pub fn transposition(degree: usize, a: u32, b: u32) -> Self {
        let mut p = Self::identity(degree.max(a as usize).max(b as usize));
        p.0.swap(a as usize - 1, b as usize - 1);
        p
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut result = Self::identity(degree);
        for cycle in cycles {
            if cycle.iter().any(|&x| x == 0 || x as usize > degree) {
                return Err(Error::InvalidPermutation(format!("cycle {cycle:?} outside 1..={degree}")));
            }
            let mut c = Self::identity(degree);
            for (k, &x) in cycle.iter().enumerate() {
                c.0[x as usize - 1] = cycle[(k + 1) % cycle.len()];
            }
            result = result.then(&c);
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `iπ`; points beyond the degree are fixed.
    pub fn apply(&self, i: u32) -> u32 {
        self.0.get(i as usize - 1).copied().unwrap_or(i)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Perm(inv)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        let n = self.degree().max(other.degree());
        Perm((1..=n as u32).map(|i| other.apply(self.apply(i))).collect())
    }

    pub fn extend(&self, degree: usize) -> Perm {
        let mut images = self.0.clone();
        images.extend(self.0.len() as u32 + 1..=degree as u32);
        Perm(images)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn sign(&self) -> i8 {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut even = true;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize - 1;
                len += 1;
            }
            if len % 2 == 0 {
                even = !even;
            }
        }
        if even {
            1
        } else {
            -1
        }
    }

    /// Drops trailing fixed points.
    pub fn normalized(&self) -> Perm {
        let mut images = self.0.clone();
        while let Some(&last) = images.last() {
            if last as usize == images.len() {
                images.pop();
            } else {
                break;
            }
        }
        Perm(images)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start + 1 {
                continue;
            }
            let mut i = start;
            f.write_str("(")?;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize - 1;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("id")?;
        }
        Ok(())
    }
}

/// All arrangements of `items` with the sign of each, via Heap's algorithm
/// (consecutive arrangements differ by one transposition).
pub fn signed_arrangements(items: &[u32]) -> Vec<(Vec<u32>, i8)> {
    let mut a = items.to_vec();
    let k = a.len();
    let mut out = vec![(a.clone(), 1i8)];
    let mut sign = 1i8;
    let mut c = vec![0usize; k];
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// The column stabiliser of a labelling, as a restartable signed enumeration.
///
/// Each group element is visited exactly once, paired with its sign; the
/// group is the direct product of the symmetric groups on each column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutationSum {
    degree: usize,
    blocks: Vec<Vec<u32>>,
}

impl SignedPermutationSum {
    /// Direct product of the full symmetric groups on each block of points.
    pub fn from_blocks(degree: usize, blocks: Vec<Vec<u32>>) -> Self {
        SignedPermutationSum { degree, blocks }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Group order, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.blocks
            .iter()
            .map(|b| factorial(b.len().min(34)))
            .fold(1u128, |acc, f| acc.saturating_mul(f))
    }

    pub fn check_budget(&self, budget: u128) -> Result<()> {
        let order = self.order();
        if order > budget {
            return Err(Error::SizeLimitExceeded {
                what: "column stabiliser enumeration",
                needed: order,
                limit: budget,
            });
        }
        Ok(())
    }

    pub fn iter(&self) -> SignedPermIter {
        let factors: Vec<Vec<(Vec<u32>, i8)>> = self
            .blocks
            .iter()
            .map(|b| signed_arrangements(b))
            .collect();
        SignedPermIter {
            degree: self.degree,
            blocks: self.blocks.clone(),
            counters: vec![0; factors.len()],
            factors,
            done: false,
        }
    }

    /// The formal signed sum as an explicit group-algebra element.
    pub fn expand(&self) -> GroupAlgebraElement {
        let mut el = GroupAlgebraElement::default();
        for (p, s) in self.iter() {
            el.add_term(p, s as i64);
        }
        el
    }
}

pub struct SignedPermIter {
    degree: usize,
    blocks: Vec<Vec<u32>>,
    factors: Vec<Vec<(Vec<u32>, i8)>>,
    counters: Vec<usize>,
    done: bool,
}

impl Iterator for SignedPermIter {
    type Item = (Perm, i8);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut images: Vec<u32> = (1..=self.degree as u32).collect();
        let mut sign = 1i8;
        for (k, block) in self.blocks.iter().enumerate() {
            let (arrangement, s) = &self.factors[k][self.counters[k]];
            for (from, to) in block.iter().zip(arrangement) {
                images[*from as usize - 1] = *to;
            }
            sign *= s;
        }
        // odometer
        let mut k = 0;
        loop {
            if k == self.counters.len() {
                self.done = true;
                break;
            }
            self.counters[k] += 1;
            if self.counters[k] < self.factors[k].len() {
                break;
            }
            self.counters[k] = 0;
            k += 1;
        }
        Some((Perm(images), sign))
    }
}

/// A finite integer combination of permutations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<Perm, i64>,
}

impl GroupAlgebraElement {
    pub fn identity() -> Self {
        let mut el = Self::default();
        el.add_term(Perm::identity(0), 1);
        el
    }

    pub fn add_term(&mut self, p: Perm, coeff: i64) {
        let key = p.normalized();
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Perm, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Product in the right-action convention: `(a b)` means `a` then `b`.
    pub fn mul(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::default();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.then(q), a * b);
            }
        }
        out
    }
}
