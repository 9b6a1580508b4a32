//! Partitions, Young diagrams and tableaux.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{factorial, Perm};

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl Partition {
    /// Drops trailing zeros; `None` unless the parts are weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Option<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return None;
        }
        Some(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows, i.e. the first column of the transpose.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let first = self.part(0);
        Partition((0..first).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.0[i] <= self.0[i])
    }

    /// `λ_i - j + (λᵀ_j - i) + 1` for the cell in row `i`, column `j`.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let t = self.transpose();
        self.0[i] - j + t.0[j] - i - 1
    }

    /// Dimension of the irreducible module, `n! / Π hooks`.
    pub fn hook_dim(&self) -> u128 {
        let n = self.weight();
        let mut prod: u128 = 1;
        for i in 0..self.len() {
            for j in 0..self.0[i] {
                prod *= self.hook(i, j) as u128;
            }
        }
        factorial(n) / prod
    }
}

/// All partitions of `n`, largest first in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("row lengths do not form a partition")]
    NotPartition,
    #[error("entries are not exactly 1..n")]
    BadEntries,
}

/// A filling of a Young diagram with `1..n`, each used once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<YoungTableau, TableauError> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).ok_or(TableauError::NotPartition)?;
        let n = shape.weight();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(TableauError::BadEntries);
            }
            seen[x] = true;
        }
        Ok(YoungTableau { shape, rows })
    }

    /// Row-reading filling `1, 2, ..` which is standard.
    pub fn canonical(shape: &Partition) -> YoungTableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let r: Vec<usize> = (next..next + len).collect();
                next += len;
                r
            })
            .collect();
        YoungTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.part(0))
            .map(|j| self.rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    /// Permutations of `{0..n-1}` preserving each of the given blocks of
    /// 1-based entries.
    pub fn block_group(n: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
        let mut out = vec![Perm::identity(n)];
        for block in blocks {
            let mut next = Vec::new();
            for local in crate::perm::all_perms(block.len()) {
                let mut images: Vec<usize> = (0..n).collect();
                for (k, &b) in block.iter().enumerate() {
                    images[b - 1] = block[local.apply(k)] - 1;
                }
                let p = Perm::from_images(images).expect("block permutation");
                for q in &out {
                    next.push(p.compose(q));
                }
            }
            out = next;
        }
        out
    }

    pub fn row_group(&self) -> Vec<Perm> {
        YoungTableau::block_group(self.shape.weight(), &self.rows)
    }

    pub fn column_group(&self) -> Vec<Perm> {
        YoungTableau::block_group(self.shape.weight(), &self.columns())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts_of_partitions() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn transpose_is_involutive() {
        for n in 0..=8 {
            for l in partitions(n) {
                assert_eq!(l.transpose().transpose(), l);
                assert_eq!(l.transpose().weight(), n);
            }
        }
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[5]).hook_dim(), 1);
        assert_eq!(p(&[1, 1, 1, 1]).hook_dim(), 1);
        assert_eq!(p(&[2, 1]).hook_dim(), 2);
        assert_eq!(p(&[3, 2]).hook_dim(), 5);
        // sum of squares is n!
        for n in 1..=8 {
            let s: u128 = partitions(n).iter().map(|l| l.hook_dim().pow(2)).sum();
            assert_eq!(s, factorial(n));
        }
    }

    #[test]
    fn tableau_groups() {
        let t = YoungTableau::canonical(&p(&[2, 1]));
        assert!(t.is_standard());
        assert_eq!(t.row_group().len(), 2);
        assert_eq!(t.column_group().len(), 2);
        assert_eq!(YoungTableau::new(vec![vec![1, 1]]), Err(TableauError::BadEntries));
        assert_eq!(YoungTableau::new(vec![vec![1], vec![2, 3]]), Err(TableauError::NotPartition));
    }
}
