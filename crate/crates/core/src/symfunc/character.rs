//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, centraliser orders and Specht module dimensions.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::partition::Partition;

/// Memoised character values `χ^λ(ρ)`.
///
/// The memo is shared behind a read-write lock; concurrent callers only
/// ever insert values that are already final, so races are harmless.
#[derive(Debug, Default)]
pub struct CharacterTable {
    memo: RwLock<HashMap<(Partition, Partition), i64>>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ(ρ)`, zero when the sizes differ.
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        if lambda.size() != rho.size() {
            return 0;
        }
        if rho.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), rho.clone());
        if let Some(&v) = self.memo.read().expect("character memo poisoned").get(&key) {
            return v;
        }
        let k = rho.first();
        let rest = rho.tail();
        let value = remove_rim_hooks(lambda, k)
            .into_iter()
            .map(|(smaller, sign)| sign * self.value(&smaller, &rest))
            .sum();
        self.memo.write().expect("character memo poisoned").insert(key, value);
        value
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("character memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All partitions obtained by removing a rim hook of length `k` from `lambda`,
/// each with the sign `(-1)^(height)`.
///
/// Works on beta-numbers: a rim hook of length `k` is a bead moved from
/// position `b` to the empty position `b - k`; the leg length is the number
/// of beads jumped over.
pub fn remove_rim_hooks(lambda: &Partition, k: u32) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let beta: Vec<i64> = (0..len)
        .map(|i| lambda.part(i) as i64 + (len - 1 - i) as i64)
        .collect();
    let k = k as i64;
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - k;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &v)| (v - (len - 1 - i) as i64) as u32)
            .collect();
        out.push((Partition::from_parts_unsorted(parts), sign));
    }
    out
}

/// Order of the centraliser of a permutation with cycle type `rho`:
/// `z_ρ = Π_k k^{m_k} m_k!`.
pub fn centralizer_order(rho: &Partition) -> u128 {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &mult)| {
            let power = (k as u128).pow(mult);
            let fact: u128 = (1..=mult as u128).product();
            power * fact
        })
        .product()
}

/// Number of standard Young tableaux of shape `lambda` (hook length formula).
pub fn specht_dimension(lambda: &Partition) -> u128 {
    let n = lambda.size() as u128;
    let conj = lambda.conjugate();
    let mut hooks: Vec<u128> = Vec::with_capacity(n as usize);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.part(j) as usize - i - 1;
            hooks.push((arm + leg + 1) as u128);
        }
    }
    let factorial: u128 = (1..=n).product();
    factorial / hooks.into_iter().product::<u128>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_character_values() {
        let table = CharacterTable::new();
        // S_3: rows (3),(2,1),(1,1,1); columns (1,1,1),(2,1),(3)
        let expected = [[1, 1, 1], [2, 0, -1], [1, -1, 1]];
        let shapes = [p("3"), p("2,1"), p("1,1,1")];
        let classes = [p("1,1,1"), p("2,1"), p("3")];
        for (i, l) in shapes.iter().enumerate() {
            for (j, r) in classes.iter().enumerate() {
                assert_eq!(table.value(l, r), expected[i][j], "{l} at {r}");
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        let table = CharacterTable::new();
        for n in 1..=7 {
            let all = partitions(n);
            let factorial: u128 = (1..=n as u128).product();
            for rho in &all {
                for sigma in &all {
                    let s: i64 = all.iter().map(|l| table.value(l, rho) * table.value(l, sigma)).sum();
                    let expected = if rho == sigma { centralizer_order(rho) as i64 } else { 0 };
                    assert_eq!(s, expected);
                }
                assert_eq!(factorial % centralizer_order(rho), 0);
            }
        }
    }

    #[test]
    fn dimension_is_character_at_identity() {
        let table = CharacterTable::new();
        for n in 0..=9 {
            for l in partitions(n) {
                let id = Partition::column(n);
                assert_eq!(specht_dimension(&l) as i64, table.value(&l, &id));
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(specht_dimension(&p("5")), 1);
        assert_eq!(specht_dimension(&p("2,2")), 2);
        assert_eq!(specht_dimension(&p("3,1")), 3);
        assert_eq!(specht_dimension(&p("")), 1);
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(centralizer_order(&p("1,1,1")), 6);
        assert_eq!(centralizer_order(&p("2,1")), 2);
        assert_eq!(centralizer_order(&p("2,2")), 8);
        assert_eq!(centralizer_order(&p("")), 1);
    }
}
