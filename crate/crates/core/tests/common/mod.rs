//! Test-side oracles. Nothing here calls into the library's character,
//! plethysm or tableau code.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use plethyra::Partition;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Every permutation of `0..k` as an image vector.
pub fn all_perms(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in all_perms(k - 1) {
        for pos in 0..k {
            let mut v = rest.clone();
            v.insert(pos, k - 1);
            out.push(v);
        }
    }
    out
}

pub fn cycle_type(images: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; images.len()];
    let mut lengths = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Characters by peeling rim hooks off the diagram: the hook at `(i, j)`
/// with arm `a` and leg `l` leaves rows `λ_{r+1} - 1` for `i ≤ r < i+l`
/// and `j` in row `i+l`.
#[derive(Default)]
pub struct Characters {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl Characters {
    pub fn value(&mut self, lambda: &[u32], rho: &[u32]) -> i64 {
        if rho.is_empty() {
            return if lambda.is_empty() { 1 } else { 0 };
        }
        let key = (lambda.to_vec(), rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let k = rho[0];
        let rest = &rho[1..];
        let conj = conjugate(lambda);
        let mut total = 0;
        for i in 0..lambda.len() {
            for j in 0..lambda[i] as usize {
                let arm = lambda[i] - j as u32 - 1;
                let leg = conj[j] - i as u32 - 1;
                if arm + leg + 1 != k {
                    continue;
                }
                let mut shape = lambda.to_vec();
                let l = leg as usize;
                for r in i..i + l {
                    shape[r] = lambda[r + 1] - 1;
                }
                shape[i + l] = j as u32;
                shape.retain(|&x| x > 0);
                let sign = if leg % 2 == 0 { 1 } else { -1 };
                total += sign * self.value(&shape, rest);
            }
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let width = lambda.first().copied().unwrap_or(0);
    (1..=width).map(|j| lambda.iter().filter(|&&x| x >= j).count() as u32).collect()
}

/// Standard tableau count by removing corners.
pub fn standard_count(lambda: &[u32], memo: &mut HashMap<Vec<u32>, u128>) -> u128 {
    if lambda.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(lambda) {
        return v;
    }
    let mut total = 0;
    for i in 0..lambda.len() {
        let below = lambda.get(i + 1).copied().unwrap_or(0);
        if lambda[i] > below {
            let mut shape = lambda.to_vec();
            shape[i] -= 1;
            shape.retain(|&x| x > 0);
            total += standard_count(&shape, memo);
        }
    }
    memo.insert(lambda.to_vec(), total);
    total
}

/// Every partition of `n`, any order.
pub fn all_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `p^λ_{ν,(m)}` for every `λ ⊢ mn`, as `⟨χ^λ↓, Inf χ^ν⟩` over the wreath
/// product `S_m ≀ S_n`, by enumerating all of its elements.
pub fn wreath_multiplicities(nu: &[u32], m: u32) -> HashMap<Vec<u32>, BigInt> {
    let n: u32 = nu.iter().sum();
    let (mu, nn) = (m as usize, n as usize);
    let base = all_perms(mu);
    let tops = all_perms(nn);
    // (cycle type of w, cycle type of its top permutation) -> count
    let mut classes: HashMap<(Vec<u32>, Vec<u32>), u64> = HashMap::new();
    let mut order = 0u64;
    let mut choice = vec![0usize; nn];
    loop {
        for sigma in &tops {
            let mut images = vec![0usize; mu * nn];
            for b in 0..nn {
                for x in 0..mu {
                    images[b * mu + x] = sigma[b] * mu + base[choice[b]][x];
                }
            }
            *classes.entry((cycle_type(&images), cycle_type(sigma))).or_insert(0) += 1;
            order += 1;
        }
        let mut k = nn;
        loop {
            if k == 0 {
                return finish(nu, m, n, &classes, order);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < base.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn finish(nu: &[u32], m: u32, n: u32, classes: &HashMap<(Vec<u32>, Vec<u32>), u64>, order: u64) -> HashMap<Vec<u32>, BigInt> {
    let mut chars = Characters::default();
    let mut out = HashMap::new();
    for lambda in all_partitions(m * n) {
        let mut total = BigRational::zero();
        for ((w, s), &count) in classes {
            let v = chars.value(&lambda, w) * chars.value(nu, s);
            total += BigRational::from_integer(BigInt::from(v) * BigInt::from(count));
        }
        total /= BigRational::from_integer(BigInt::from(order));
        assert!(total.is_integer(), "non-integral multiplicity");
        let c = total.to_integer();
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    out
}

pub fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().unwrap()
}
