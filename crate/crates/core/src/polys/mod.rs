//! Free Lie and associative polynomials in decorated variables.

mod parse;
mod symmetrizer;

pub use parse::{parse, Mode, ParseError, ParseErrorKind};
pub use symmetrizer::{symmetrizer_factors, young_symmetrizer, GroupAlgebraElement, SymmetrizerKind};

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use crate::perm::{all_perms, Perm};
use crate::scalar::Rational;

/// `x_index^deco`; `index` is 1-based, `deco` a group element index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub index: usize,
    pub deco: Option<usize>,
}

impl Var {
    pub fn new(index: usize, deco: Option<usize>) -> Var {
        Var { index, deco }
    }

    pub fn plain(index: usize) -> Var {
        Var { index, deco: None }
    }

    fn write(&self, out: &mut String, names: &[String]) {
        let _ = write!(out, "x{}", self.index);
        if let Some(g) = self.deco {
            match names.get(g) {
                Some(name) => {
                    let _ = write!(out, "^{}", name);
                }
                None => {
                    let _ = write!(out, "^#{}", g);
                }
            }
        }
    }
}

/// A monomial shape that can be relabeled.
pub trait Monomial: Clone + Ord {
    fn variables(&self) -> Vec<Var>;
    fn map_vars(&self, f: &dyn Fn(Var) -> Var) -> Self;
    fn write(&self, out: &mut String, names: &[String]);
}

/// Binary bracket tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieTree {
    Leaf(Var),
    Node(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn bracket(a: LieTree, b: LieTree) -> LieTree {
        LieTree::Node(Box::new(a), Box::new(b))
    }

    /// `[v_1, v_2, ..., v_k]` bracketed from the left.
    pub fn left_normed(vars: &[Var]) -> LieTree {
        let mut it = vars.iter();
        let mut t = LieTree::Leaf(*it.next().expect("at least one variable"));
        for v in it {
            t = LieTree::bracket(t, LieTree::Leaf(*v));
        }
        t
    }

    pub fn degree(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 1,
            LieTree::Node(a, b) => a.degree() + b.degree(),
        }
    }
}

impl Monomial for LieTree {
    fn variables(&self) -> Vec<Var> {
        match self {
            LieTree::Leaf(v) => vec![*v],
            LieTree::Node(a, b) => {
                let mut out = a.variables();
                out.extend(b.variables());
                out
            }
        }
    }

    fn map_vars(&self, f: &dyn Fn(Var) -> Var) -> LieTree {
        match self {
            LieTree::Leaf(v) => LieTree::Leaf(f(*v)),
            LieTree::Node(a, b) => LieTree::bracket(a.map_vars(f), b.map_vars(f)),
        }
    }

    fn write(&self, out: &mut String, names: &[String]) {
        match self {
            LieTree::Leaf(v) => v.write(out, names),
            LieTree::Node(a, b) => {
                out.push('[');
                a.write(out, names);
                out.push_str(", ");
                b.write(out, names);
                out.push(']');
            }
        }
    }
}

/// Associative word; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Var>);

impl Monomial for Word {
    fn variables(&self) -> Vec<Var> {
        self.0.clone()
    }

    fn map_vars(&self, f: &dyn Fn(Var) -> Var) -> Word {
        Word(self.0.iter().map(|v| f(*v)).collect())
    }

    fn write(&self, out: &mut String, names: &[String]) {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            v.write(out, names);
        }
    }
}

/// Finite rational combination of monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<M: Monomial> {
    terms: BTreeMap<M, Rational>,
}

pub type LiePoly = Poly<LieTree>;
pub type AssocPoly = Poly<Word>;

impl<M: Monomial> Default for Poly<M> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<M: Monomial> Poly<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: M) -> Self {
        Self::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: M) -> Self {
        let mut p = Self::zero();
        p.add_term(c, m);
        p
    }

    pub fn add_term(&mut self, c: Rational, m: M) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(c * d, m.clone());
        }
        out
    }

    pub fn map_vars(&self, f: &dyn Fn(Var) -> Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(c.clone(), m.map_vars(f));
        }
        out
    }

    /// Variable `i` becomes `σ(i)`; decorations stay.
    pub fn permute(&self, sigma: &Perm) -> Self {
        self.map_vars(&|v| {
            if v.index >= 1 && v.index <= sigma.degree() {
                Var::new(sigma.apply(v.index - 1) + 1, v.deco)
            } else {
                v
            }
        })
    }

    /// `Σ sign(σ) σ·p` over permutations of the listed variable indices.
    pub fn alternate(&self, vars: &[usize]) -> Self {
        let n = self.max_index().max(vars.iter().copied().max().unwrap_or(0));
        let mut out = Self::zero();
        for local in all_perms(vars.len()) {
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &v) in vars.iter().enumerate() {
                images[v - 1] = vars[local.apply(k)] - 1;
            }
            let sigma = Perm::from_images(images).expect("alternation over distinct indices");
            let sign = Rational::from_integer(local.sign().into());
            out = out.add(&self.permute(&sigma).scale(&sign));
        }
        out
    }

    pub fn max_index(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.variables())
            .map(|v| v.index)
            .max()
            .unwrap_or(0)
    }

    /// `Some(n)` if every monomial uses each of `x_1..x_n` exactly once.
    pub fn multilinear_degree(&self) -> Option<usize> {
        let n = self.max_index();
        for m in self.terms.keys() {
            let mut seen = vec![false; n + 1];
            let vars = m.variables();
            if vars.len() != n {
                return None;
            }
            for v in vars {
                if v.index == 0 || seen[v.index] {
                    return None;
                }
                seen[v.index] = true;
            }
        }
        Some(n)
    }

    /// Text in the input grammar, decorations printed by name.
    pub fn to_text(&self, names: &[String]) -> String {
        let mut out = String::new();
        if self.terms.is_empty() {
            out.push('0');
            return out;
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if m.variables().is_empty() {
                let _ = write!(out, "{}", a);
                continue;
            }
            if !a.is_one() {
                let _ = write!(out, "{}*", a);
            }
            m.write(&mut out, names);
        }
        out
    }
}

impl LiePoly {
    pub fn var(v: Var) -> LiePoly {
        LiePoly::monomial(LieTree::Leaf(v))
    }

    /// Bilinear extension of the bracket of trees.
    pub fn bracket(&self, other: &LiePoly) -> LiePoly {
        let mut out = LiePoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(c * d, LieTree::bracket(a.clone(), b.clone()));
            }
        }
        out
    }
}

impl AssocPoly {
    pub fn var(v: Var) -> AssocPoly {
        AssocPoly::monomial(Word(vec![v]))
    }

    pub fn unit() -> AssocPoly {
        AssocPoly::monomial(Word(Vec::new()))
    }

    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut w = a.0.clone();
                w.extend_from_slice(&b.0);
                out.add_term(c * d, Word(w));
            }
        }
        out
    }

    pub fn commutator(&self, other: &AssocPoly) -> AssocPoly {
        self.mul(other).sub(&other.mul(self))
    }
}

/// Either flavor, as produced by the parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polynomial {
    Lie(LiePoly),
    Assoc(AssocPoly),
}

impl Polynomial {
    pub fn to_text(&self, names: &[String]) -> String {
        match self {
            Polynomial::Lie(p) => p.to_text(names),
            Polynomial::Assoc(p) => p.to_text(names),
        }
    }

    pub fn multilinear_degree(&self) -> Option<usize> {
        match self {
            Polynomial::Lie(p) => p.multilinear_degree(),
            Polynomial::Assoc(p) => p.multilinear_degree(),
        }
    }
}

/// `[x_{σ(1)}^{g_1}, ..., x_{σ(n)}^{g_n}]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeftNormedMonomial {
    pub sigma: Perm,
    pub decorations: Vec<usize>,
}

impl LeftNormedMonomial {
    pub fn vars(&self) -> Vec<Var> {
        (0..self.sigma.degree())
            .map(|t| Var::new(self.sigma.apply(t) + 1, Some(self.decorations[t])))
            .collect()
    }

    pub fn to_tree(&self) -> LieTree {
        LieTree::left_normed(&self.vars())
    }
}

/// All `n!·|G|^n` monomials, permutations in lexicographic order outermost
/// and decoration tuples lexicographic inside.
pub fn spanning_monomials(n: usize, group_order: usize) -> SpanningMonomials {
    SpanningMonomials {
        perms: all_perms(n),
        current: None,
        decorations: vec![0; n],
        group_order,
        n,
    }
}

pub struct SpanningMonomials {
    perms: crate::perm::PermIter,
    current: Option<Perm>,
    decorations: Vec<usize>,
    group_order: usize,
    n: usize,
}

impl Iterator for SpanningMonomials {
    type Item = LeftNormedMonomial;

    fn next(&mut self) -> Option<LeftNormedMonomial> {
        if self.group_order == 0 || self.n == 0 {
            return None;
        }
        if self.current.is_none() {
            self.current = Some(self.perms.next()?);
            self.decorations.iter_mut().for_each(|d| *d = 0);
        }
        let out = LeftNormedMonomial {
            sigma: self.current.clone().unwrap(),
            decorations: self.decorations.clone(),
        };
        // odometer, last slot fastest
        let mut k = self.n;
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            self.decorations[k] += 1;
            if self.decorations[k] < self.group_order {
                break;
            }
            self.decorations[k] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn x(i: usize) -> Var {
        Var::plain(i)
    }

    fn names() -> Vec<String> {
        vec!["e".to_string(), "psi".to_string()]
    }

    #[test]
    fn permute_relabels_indices() {
        let p = LiePoly::monomial(LieTree::left_normed(&[Var::new(1, Some(1)), x(2), x(3)]));
        let s = Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let q = LiePoly::monomial(LieTree::left_normed(&[Var::new(2, Some(1)), x(3), x(1)]));
        assert_eq!(p.permute(&s), q);
        assert_eq!(p.permute(&Perm::identity(3)), p);
        let t = Perm::transposition(2, 0, 1);
        let b = LiePoly::var(x(1)).bracket(&LiePoly::var(x(2)));
        assert_eq!(b.permute(&t), LiePoly::var(x(2)).bracket(&LiePoly::var(x(1))));
    }

    #[test]
    fn alternation_of_a_product() {
        let p = AssocPoly::var(x(1)).mul(&AssocPoly::var(x(2)));
        assert_eq!(p.alternate(&[1, 2]), AssocPoly::var(x(1)).commutator(&AssocPoly::var(x(2))));
        assert_eq!(p.alternate(&[2]), p);
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(spanning_monomials(1, 1).count(), 1);
        assert_eq!(spanning_monomials(2, 2).count(), 8);
        assert_eq!(spanning_monomials(3, 1).count(), 6);
        assert_eq!(spanning_monomials(4, 3).count(), 24 * 81);
        let v: Vec<_> = spanning_monomials(2, 2).collect();
        let mut sorted = v.clone();
        sorted.sort();
        assert_eq!(v, sorted);
    }

    #[test]
    fn multilinearity() {
        let p = LiePoly::var(x(1)).bracket(&LiePoly::var(x(2)));
        assert_eq!(p.multilinear_degree(), Some(2));
        let q = LiePoly::var(x(1)).bracket(&LiePoly::var(x(1)));
        assert_eq!(q.multilinear_degree(), None);
        assert_eq!(LiePoly::var(x(2)).multilinear_degree(), None);
    }

    fn lie_poly() -> impl Strategy<Value = LiePoly> {
        let leaf = (1usize..5, prop::option::of(0usize..2)).prop_map(|(i, d)| LieTree::Leaf(Var::new(i, d)));
        let tree = leaf.prop_recursive(3, 8, 2, |inner| (inner.clone(), inner).prop_map(|(a, b)| LieTree::bracket(a, b)));
        prop::collection::vec((-3i64..4, 1i64..4, tree), 0..4).prop_map(|ts| {
            let mut p = LiePoly::zero();
            for (n, d, t) in ts {
                p.add_term(Rational::new(n.into(), d.into()), t);
            }
            p
        })
    }

    fn assoc_poly() -> impl Strategy<Value = AssocPoly> {
        let word = prop::collection::vec((1usize..4, prop::option::of(0usize..2)), 0..4)
            .prop_map(|v| Word(v.into_iter().map(|(i, d)| Var::new(i, d)).collect()));
        prop::collection::vec((-3i64..4, 1i64..4, word), 0..4).prop_map(|ts| {
            let mut p = AssocPoly::zero();
            for (n, d, w) in ts {
                p.add_term(Rational::new(n.into(), d.into()), w);
            }
            p
        })
    }

    fn multilinear_lie(n: usize) -> impl Strategy<Value = LiePoly> {
        prop::collection::vec((-2i64..3, Just((0..n).collect::<Vec<usize>>()).prop_shuffle()), 1..4).prop_map(
            move |ts| {
                let mut p = LiePoly::zero();
                for (c, order) in ts {
                    let vars: Vec<Var> = order.iter().map(|&i| Var::plain(i + 1)).collect();
                    p.add_term(Rational::from_integer(c.into()), LieTree::left_normed(&vars));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn lie_text_round_trips(p in lie_poly()) {
            let text = p.to_text(&names());
            let back = parse(&text, Mode::Lie, &names()).unwrap();
            prop_assert_eq!(back, Polynomial::Lie(p));
        }

        #[test]
        fn assoc_text_round_trips(p in assoc_poly()) {
            let text = p.to_text(&names());
            let back = parse(&text, Mode::Assoc, &names()).unwrap();
            prop_assert_eq!(back, Polynomial::Assoc(p));
        }

        #[test]
        fn permutation_is_an_action(
            p in multilinear_lie(4),
            s in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
            t in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        ) {
            let s = Perm::from_images(s).unwrap();
            let t = Perm::from_images(t).unwrap();
            prop_assert_eq!(p.permute(&s).permute(&t), p.permute(&t.compose(&s)));
        }

        #[test]
        fn double_alternation_scales_by_factorial(p in multilinear_lie(4)) {
            let set = [1usize, 3, 4];
            let once = p.alternate(&set);
            prop_assert_eq!(once.alternate(&set), once.scale(&Rational::from_integer(6.into())));
        }
    }
}
