//! Irreducible characters of `S_n` by the Murnaghan-Nakayama rule, using
//! beta-numbers: removing a border strip of length `r` is moving one bead
//! from position `b` to the free position `b - r`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::partition::{partitions, Partition};
use crate::perm::factorial;

/// Memoized character values.
#[derive(Default, Debug)]
pub struct CharacterCache {
    memo: BTreeMap<(Vec<usize>, Vec<usize>), i64>,
}

impl CharacterCache {
    pub fn new() -> CharacterCache {
        CharacterCache::default()
    }

    /// `χ_λ(μ)` where `μ` is a cycle type of the same weight.
    pub fn value(&mut self, lambda: &Partition, mu: &[usize]) -> i64 {
        assert_eq!(lambda.weight(), mu.iter().sum::<usize>(), "weights differ");
        let mut mu: Vec<usize> = mu.iter().copied().filter(|&x| x > 0).collect();
        mu.sort_unstable_by(|a, b| b.cmp(a));
        self.rec(lambda.parts().to_vec(), &mu)
    }

    fn rec(&mut self, lambda: Vec<usize>, mu: &[usize]) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = mu[0];
        let s = lambda.len();
        // beta-numbers, strictly decreasing
        let beta: Vec<usize> = (0..s).map(|i| lambda[i] + (s - 1 - i)).collect();
        let mut total = 0i64;
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let between = beta.iter().filter(|&&x| x > target && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            let mut nb = beta.clone();
            nb[i] = target;
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let len = nb.len();
            let parts: Vec<usize> = (0..len).map(|k| nb[k] - (len - 1 - k)).filter(|&x| x > 0).collect();
            total += sign * self.rec(parts, &mu[1..]);
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ_λ(μ)` without a shared cache.
pub fn mn_character(lambda: &Partition, mu: &[usize]) -> i64 {
    CharacterCache::new().value(lambda, mu)
}

/// `z_μ = Π i^{m_i} m_i!`, the centralizer order.
pub fn centralizer_order(mu: &[usize]) -> u128 {
    let mut counts = BTreeMap::new();
    for &p in mu {
        *counts.entry(p).or_insert(0usize) += 1;
    }
    counts
        .iter()
        .map(|(&i, &m)| (i as u128).pow(m as u32) * factorial(m))
        .product()
}

/// Size of the conjugacy class of cycle type `μ`.
pub fn class_size(mu: &[usize]) -> u128 {
    factorial(mu.iter().sum()) / centralizer_order(mu)
}

/// Character table with rows and columns both indexed by `partitions(n)`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> CharacterTable {
        let ps = partitions(n);
        let mut cache = CharacterCache::new();
        let values = ps
            .iter()
            .map(|l| ps.iter().map(|m| cache.value(l, m.parts())).collect())
            .collect();
        CharacterTable {
            n,
            partitions: ps,
            values,
        }
    }

    /// `Σ_μ |C_μ| χ_λ(μ) χ_ν(μ)`, which is `n!` or `0`.
    pub fn row_inner(&self, a: usize, b: usize) -> BigInt {
        let mut acc = BigInt::from(0);
        for (k, mu) in self.partitions.iter().enumerate() {
            acc += BigInt::from(class_size(mu.parts())) * self.values[a][k] * self.values[b][k];
        }
        acc
    }

    /// `Σ_λ χ_λ(μ) χ_λ(ν)`, which is `z_μ` or `0`.
    pub fn column_inner(&self, a: usize, b: usize) -> BigInt {
        let mut acc = BigInt::from(0);
        for row in &self.values {
            acc += BigInt::from(row[a]) * row[b];
        }
        acc
    }

    /// Checks both orthogonality relations exactly.
    pub fn is_orthogonal(&self) -> bool {
        let k = self.partitions.len();
        let nf = BigInt::from(factorial(self.n));
        for a in 0..k {
            for b in 0..k {
                let row = self.row_inner(a, b);
                let col = self.column_inner(a, b);
                let (want_row, want_col) = if a == b {
                    (nf.clone(), BigInt::from(centralizer_order(self.partitions[a].parts())))
                } else {
                    (BigInt::from(0), BigInt::from(0))
                };
                if row != want_row || col != want_col {
                    return false;
                }
            }
        }
        true
    }
}

/// Sign of a permutation of cycle type `μ`.
pub fn class_sign(mu: &[usize]) -> i64 {
    if mu.iter().filter(|&&p| p % 2 == 0).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=6 {
            let triv = Partition::new(alloc::vec![n]).unwrap();
            let sgn = Partition::new(alloc::vec![1; n]).unwrap();
            for mu in partitions(n) {
                assert_eq!(mn_character(&triv, mu.parts()), 1);
                assert_eq!(mn_character(&sgn, mu.parts()), class_sign(mu.parts()));
            }
        }
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(3);
        // rows (3), (2,1), (1,1,1); columns (3), (2,1), (1,1,1)
        assert_eq!(t.values, alloc::vec![alloc::vec![1, 1, 1], alloc::vec![-1, 0, 2], alloc::vec![1, -1, 1]]);
    }

    #[test]
    fn orthogonality_through_seven() {
        for n in 1..=7 {
            assert!(CharacterTable::new(n).is_orthogonal(), "n = {}", n);
        }
    }

    #[test]
    fn degree_is_hook_dimension() {
        for n in 1..=7 {
            let id = alloc::vec![1; n];
            for l in partitions(n) {
                assert_eq!(mn_character(&l, &id) as u128, l.hook_dim());
            }
        }
    }
}
