//! The group algebra of `S_n` and Young symmetrizers.

use alloc::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{Monomial, Poly};
use crate::codim::partition::YoungTableau;
use crate::perm::Perm;
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Perm, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Perm::identity(n), Rational::one())
    }

    pub fn from_perm(p: Perm, c: Rational) -> Self {
        let mut out = Self::zero(p.degree());
        out.add_term(p, c);
        out
    }

    /// `Σ_{π ∈ perms} sign(π)^signed · π`.
    pub fn sum_of(n: usize, perms: &[Perm], signed: bool) -> Self {
        let mut out = Self::zero(n);
        for p in perms {
            let c = if signed { p.sign() } else { 1 };
            out.add_term(p.clone(), Rational::from_integer(c.into()));
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, p: Perm, c: Rational) {
        assert_eq!(p.degree(), self.n, "permutation degree");
        let slot = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Perm) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (p, d) in &self.terms {
            out.add_term(p.clone(), c * d);
        }
        out
    }

    /// `Σ a_τ b_σ (τ∘σ)`, so that applying the product applies `other` first.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (t, c) in &self.terms {
            for (s, d) in &other.terms {
                out.add_term(t.compose(s), c * d);
            }
        }
        out
    }

    /// Linear extension of `permute`.
    pub fn apply<M: Monomial>(&self, p: &Poly<M>) -> Poly<M> {
        let mut out = Poly::zero();
        for (s, c) in &self.terms {
            out = out.add(&p.permute(s).scale(c));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetrizerKind {
    /// `a_T b_T`
    E,
    /// `b_T a_T`
    EStar,
}

/// Product of the row symmetrizer `a_T` and signed column symmetrizer `b_T`.
pub fn young_symmetrizer(t: &YoungTableau, kind: SymmetrizerKind) -> GroupAlgebraElement {
    let n = t.shape().weight();
    let a = GroupAlgebraElement::sum_of(n, &t.row_group(), false);
    let b = GroupAlgebraElement::sum_of(n, &t.column_group(), true);
    match kind {
        SymmetrizerKind::E => a.mul(&b),
        SymmetrizerKind::EStar => b.mul(&a),
    }
}

/// Row and column groups, for callers that want the factors separately.
pub fn symmetrizer_factors(t: &YoungTableau) -> (GroupAlgebraElement, GroupAlgebraElement) {
    let n = t.shape().weight();
    (
        GroupAlgebraElement::sum_of(n, &t.row_group(), false),
        GroupAlgebraElement::sum_of(n, &t.column_group(), true),
    )
}
