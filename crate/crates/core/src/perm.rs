//! Permutations of `{0, .., n-1}` stored as image vectors.

use alloc::vec::Vec;
use core::fmt;

/// A permutation `i -> images[i]` of `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // one-line notation, 1-based
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its images; `None` if not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Perm> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm { images })
    }

    /// Permutation given by 1-based cycles, e.g. `[[1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || b == 0 || a > n || b > n {
                    return None;
                }
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle lengths in weakly decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// +1 or -1.
    pub fn sign(&self) -> i32 {
        let even_cycles = self.cycle_type().iter().filter(|&&l| l % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A representative with the given cycle type: consecutive cycles
    /// `(1 .. μ1)(μ1+1 .. )...`.
    pub fn with_cycle_type(mu: &[usize]) -> Perm {
        let n: usize = mu.iter().sum();
        let mut images = Vec::with_capacity(n);
        let mut start = 0;
        for &len in mu {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Perm { images }
    }

    /// Lexicographic successor, or `None` for the last permutation.
    pub fn next_lex(&self) -> Option<Perm> {
        let mut v = self.images.clone();
        let n = v.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Perm { images: v })
    }
}

/// All permutations of `{0, .., n-1}` in lexicographic order of images.
pub fn all_perms(n: usize) -> PermIter {
    PermIter {
        next: Some(Perm::identity(n)),
    }
}

pub struct PermIter {
    next: Option<Perm>,
}

impl Iterator for PermIter {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let cur = self.next.take()?;
        self.next = cur.next_lex();
        Some(cur)
    }
}

/// `n!` as `u128`; panics past 34.
pub fn factorial(n: usize) -> u128 {
    assert!(n <= 34, "factorial overflow");
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts_and_order() {
        let perms: Vec<Perm> = all_perms(4).collect();
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_perms(0).count(), 1);
    }

    #[test]
    fn sign_and_cycle_type() {
        let p = Perm::from_cycles(5, &[&[1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(p.cycle_type(), alloc::vec![3, 2]);
        assert_eq!(p.sign(), -1);
        assert_eq!(Perm::with_cycle_type(&[3, 2]).cycle_type(), alloc::vec![3, 2]);
        assert_eq!(Perm::transposition(3, 0, 2).sign(), -1);
    }

    proptest! {
        #[test]
        fn sign_is_multiplicative(
            v in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
            w in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        ) {
            let p = Perm::from_images(v).unwrap();
            let q = Perm::from_images(w).unwrap();
            prop_assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
            prop_assert!(p.compose(&p.inverse()).is_identity());
        }
    }
}
