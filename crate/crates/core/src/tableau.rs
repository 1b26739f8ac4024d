//! Tableaux with repeated entries, labelling tableaux, and the place
//! action of permutations on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::perm::{Perm, SignedPermutationSum};

/// A filling of a Young diagram by positive integers, repeats allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|e| Error::InvalidTableau(format!("{rows:?}: {e}")))?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::InvalidTableau(format!("{rows:?} has a zero entry")));
        }
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in row `i`, column `j` (both 0-based).
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.rows.get(i).and_then(|r| r.get(j)).copied()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().filter_map(|r| r.get(j).copied()).collect()
    }

    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Entry `k` occurs `content[k-1]` times.
    pub fn content(&self) -> Composition {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max];
        for &x in self.rows.iter().flatten() {
            counts[x as usize - 1] += 1;
        }
        Composition::new(counts)
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok
    }

    /// True when some column holds a repeated entry.
    pub fn has_repeated_column_entry(&self) -> bool {
        (0..self.shape.first() as usize).any(|j| {
            let mut col = self.column(j);
            col.sort_unstable();
            col.windows(2).any(|w| w[0] == w[1])
        })
    }

    /// The function `label ↦ entry` read through the labelling `t`.
    /// Index `x - 1` holds the entry sitting where `t` has `x`.
    pub fn word(&self, t: &LabellingTableau) -> Vec<u32> {
        debug_assert_eq!(self.shape, t.shape);
        let mut w = vec![0u32; t.size()];
        for (row, labels) in self.rows.iter().zip(&t.rows) {
            for (&entry, &label) in row.iter().zip(labels) {
                w[label as usize - 1] = entry;
            }
        }
        w
    }

    /// Inverse of [`Tableau::word`].
    pub fn from_word(word: &[u32], t: &LabellingTableau) -> Tableau {
        let rows = t
            .rows
            .iter()
            .map(|labels| labels.iter().map(|&x| word[x as usize - 1]).collect())
            .collect();
        Tableau {
            shape: t.shape.clone(),
            rows,
        }
    }

    /// Replaces every entry `j` by `jσ`.
    pub fn relabel(&self, sigma: &Perm) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| sigma.apply(x)).collect())
                .collect(),
        }
    }

    /// Place action relative to `t`: `(i)(Tπ) = (iπ⁻¹)T`.
    pub fn apply_permutation(&self, t: &LabellingTableau, perm: &Perm) -> Tableau {
        let w = self.word(t);
        Tableau::from_word(&act_on_word(&w, perm), t)
    }

    /// Every distinct tableau obtained by rearranging entries within rows,
    /// in lexicographic order of the reading word.
    pub fn row_equivalence_class(&self) -> Vec<Tableau> {
        let per_row: Vec<Vec<Vec<u32>>> = self.rows.iter().map(|r| multiset_permutations(r)).collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; per_row.len()];
        loop {
            let rows = choice
                .iter()
                .zip(&per_row)
                .map(|(&c, options)| options[c].clone())
                .collect();
            out.push(Tableau {
                shape: self.shape.clone(),
                rows,
            });
            // odometer, last row fastest
            let mut k = per_row.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < per_row[k].len() {
                    break;
                }
                choice[k] = 0;
            }
        }
    }

    /// Size of the row-equivalence class: product of per-row multinomials.
    pub fn row_class_size(&self) -> u128 {
        self.rows.iter().map(|r| multinomial_of_row(r)).fold(1u128, |a, b| a.saturating_mul(b))
    }

    /// Copy with row `index` removed (0-based); the result must still be a tableau.
    pub fn remove_row(&self, index: usize) -> Result<Tableau> {
        let mut rows = self.rows.clone();
        if index >= rows.len() {
            return Err(Error::ShapeError(format!("no row {index} to remove")));
        }
        rows.remove(index);
        Tableau::new(rows).map_err(|e| Error::ShapeError(e.to_string()))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<u32>]) -> fmt::Result {
    f.write_str("[")?;
    for (i, r) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str("[")?;
        for (k, x) in r.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")?;
    }
    f.write_str("]")
}

/// `(i)(wπ) = (iπ⁻¹)w` on a label-indexed word.
pub fn act_on_word(word: &[u32], perm: &Perm) -> Vec<u32> {
    let mut out = vec![0u32; word.len()];
    for (i, &entry) in word.iter().enumerate() {
        // position i+1 moves to (i+1)π
        let target = perm.apply(i as u32 + 1);
        out[target as usize - 1] = entry;
    }
    out
}

fn multinomial_of_row(row: &[u32]) -> u128 {
    let mut sorted = row.to_vec();
    sorted.sort_unstable();
    let mut result = 1u128;
    let mut placed = 0u128;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        for k in 1..=(j - i) as u128 {
            placed += 1;
            result = result * placed / k;
        }
        i = j;
    }
    result
}

/// Distinct rearrangements of a multiset, in lexicographic order.
pub fn multiset_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut current = items.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// A bijective filling of a Young diagram by `1..=size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabellingTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl LabellingTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|e| Error::InvalidTableau(format!("{rows:?}: {e}")))?;
        let n = shape.size() as usize;
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(Error::InvalidTableau(format!(
                    "{rows:?} is not a bijective filling by 1..={n}"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(LabellingTableau { shape, rows })
    }

    /// The canonical labelling: `1, 2, ..., n` along rows, top to bottom.
    pub fn row_reading(shape: &Partition) -> Self {
        let mut next = 1u32;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let r: Vec<u32> = (next..next + len).collect();
                next += len;
                r
            })
            .collect();
        LabellingTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size() as usize
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.rows.get(i).and_then(|r| r.get(j)).copied()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().filter_map(|r| r.get(j).copied()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.shape.first() as usize).map(|j| self.column(j)).collect()
    }

    /// Signed enumeration of the column stabiliser `C_t`.
    pub fn column_stabilizer(&self) -> SignedPermutationSum {
        let blocks = self.columns().into_iter().filter(|c| c.len() > 1).collect();
        SignedPermutationSum::from_blocks(self.size(), blocks)
    }

    /// Column stabiliser, failing when its order exceeds `budget`.
    pub fn column_stabilizer_within(&self, budget: u128) -> Result<SignedPermutationSum> {
        let g = self.column_stabilizer();
        g.check_budget(budget)?;
        Ok(g)
    }

    /// `tπ`: the labelling with every label `x` replaced by `xπ`.
    pub fn act(&self, perm: &Perm) -> LabellingTableau {
        LabellingTableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| perm.apply(x)).collect())
                .collect(),
        }
    }

    /// Reinterpret as an ordinary tableau (entries are the labels).
    pub fn as_tableau(&self) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.clone(),
        }
    }
}

impl fmt::Display for LabellingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// Semistandard tableaux of the given shape and content, in lexicographic
/// order of the row-reading word.
pub fn enumerate_semistandard(shape: &Partition, content: &Composition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.size() {
        return out;
    }
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| Vec::with_capacity(p as usize)).collect();
    let mut remaining = content.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    fill_ssyt(shape, &cells, 0, &mut rows, &mut remaining, &mut out);
    out
}

fn fill_ssyt(
    shape: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    remaining: &mut [u32],
    out: &mut Vec<Tableau>,
) {
    if k == cells.len() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let (i, j) = cells[k];
    let left = if j > 0 { rows[i][j - 1] } else { 1 };
    let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
    let lo = left.max(above);
    for v in lo..=remaining.len() as u32 {
        if remaining[v as usize - 1] == 0 {
            continue;
        }
        remaining[v as usize - 1] -= 1;
        rows[i].push(v);
        fill_ssyt(shape, cells, k + 1, rows, remaining, out);
        rows[i].pop();
        remaining[v as usize - 1] += 1;
    }
}
