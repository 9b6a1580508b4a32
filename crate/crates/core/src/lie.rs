//! Finite-dimensional Lie algebras given by structure constants.

use alloc::string::String;
use alloc::vec::Vec;

use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("bracket [{0}, {0}] must vanish")]
    SelfBracket(String),
    #[error("brackets [{0}, {1}] and [{1}, {0}] are not negatives of each other")]
    Antisymmetry(String, String),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("expected {expected} basis names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("J is not contained in I")]
    NotNested,
    #[error("radical check failed: {0}")]
    RadicalCheck(&'static str),
}

/// Outcome of the Jacobi check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobiReport {
    Pass,
    Fail {
        triple: (usize, usize, usize),
        residual: Vector,
    },
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        matches!(self, JacobiReport::Pass)
    }
}

/// A descending chain of subspaces and whether it reached zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    pub terms: Vec<Subspace>,
    pub reaches_zero: bool,
}

impl Series {
    /// Number of terms before the zero term, counting `L` itself; for the
    /// lower central series this is the least `p` with all products of
    /// length `p` vanishing.
    pub fn index(&self) -> Option<usize> {
        self.reaches_zero.then_some(self.terms.len())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    field: Field,
    names: Vec<String>,
    dim: usize,
    /// `table[i * dim + j] = [e_i, e_j]`.
    table: Vec<Vector>,
    ad: Vec<Matrix>,
}

impl LieAlgebra {
    /// Builds an algebra from a list of brackets `[e_i, e_j] = v`. Unlisted
    /// pairs are zero; a pair listed in both orders must be antisymmetric.
    /// Jacobi is not checked here, see [`LieAlgebra::validate`].
    pub fn from_brackets(
        field: &Field,
        names: Vec<String>,
        brackets: &[(usize, usize, Vector)],
    ) -> Result<LieAlgebra, LieError> {
        let dim = names.len();
        let mut table: Vec<Option<Vector>> = alloc::vec![None; dim * dim];
        for (i, j, v) in brackets {
            for &k in [i, j] {
                if k >= dim {
                    return Err(LieError::IndexOutOfRange { index: k, dim });
                }
            }
            if v.len() != dim {
                return Err(LieError::BadLength {
                    expected: dim,
                    got: v.len(),
                });
            }
            let (i, j) = (*i, *j);
            if i == j {
                if !linalg::is_zero_vec(v) {
                    return Err(LieError::SelfBracket(names[i].clone()));
                }
                continue;
            }
            let neg = linalg::vec_neg(v);
            for (slot, val) in [(i * dim + j, v.clone()), (j * dim + i, neg)] {
                match &table[slot] {
                    Some(old) if *old != val => {
                        return Err(LieError::Antisymmetry(names[i].clone(), names[j].clone()))
                    }
                    _ => table[slot] = Some(val),
                }
            }
        }
        let table: Vec<Vector> = table
            .into_iter()
            .map(|v| v.unwrap_or_else(|| linalg::zero_vector(field, dim)))
            .collect();
        let ad = (0..dim)
            .map(|i| {
                Matrix::from_fn(field, dim, dim, |r, c| table[i * dim + c][r].clone())
            })
            .collect();
        Ok(LieAlgebra {
            field: field.clone(),
            names,
            dim,
            table,
            ad,
        })
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(field: &Field, dim: usize) -> LieAlgebra {
        let names = (1..=dim).map(|i| alloc::format!("x{}", i)).collect();
        LieAlgebra::from_brackets(field, names, &[]).expect("abelian algebra")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        linalg::unit_vector(&self.field, self.dim, i)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn bracket(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = linalg::zero_vector(&self.field, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() || i == j {
                    continue;
                }
                let c = ai * bj;
                linalg::axpy(&mut out, &c, &self.table[i * self.dim + j]);
            }
        }
        out
    }

    /// `ad e_i` as a matrix acting on columns.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = out.add(&self.ad[i].scale(xi));
            }
        }
        out
    }

    /// Checks Jacobi on every triple `i < j < k` of basis vectors.
    pub fn validate(&self) -> JacobiReport {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    let residual = linalg::vec_add(&linalg::vec_add(&t1, &t2), &t3);
                    if !linalg::is_zero_vec(&residual) {
                        return JacobiReport::Fail {
                            triple: (i, j, k),
                            residual,
                        };
                    }
                }
            }
        }
        JacobiReport::Pass
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(&self.field, self.dim)
    }

    /// `span{[a, b] : a ∈ A, b ∈ B}`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket(x, y);
                if !linalg::is_zero_vec(&v) {
                    vs.push(v);
                }
            }
        }
        Subspace::span(&self.field, self.dim, &vs)
    }

    pub fn is_ideal(&self, x: &Subspace) -> bool {
        (0..self.dim).all(|i| x.basis().iter().all(|v| x.contains_vec(&self.ad[i].mul_vec(v))))
    }

    /// Whether `x` is closed under the bracket.
    pub fn is_subalgebra(&self, x: &Subspace) -> bool {
        x.contains(&self.bracket_subspaces(x, x)).unwrap_or(false)
    }

    /// Smallest subspace containing `x` and stable under the given operators.
    pub fn spin(x: &Subspace, ops: &[Matrix]) -> Subspace {
        let mut cur = x.clone();
        let mut frontier: Vec<Vector> = cur.basis().to_vec();
        while let Some(v) = frontier.pop() {
            for op in ops {
                let w = op.mul_vec(&v);
                if !cur.contains_vec(&w) {
                    cur = cur
                        .sum(&Subspace::span(cur.field(), cur.ambient(), core::slice::from_ref(&w)))
                        .expect("same ambient");
                    frontier.push(w);
                }
            }
        }
        cur
    }

    pub fn ideal_closure(&self, x: &Subspace) -> Subspace {
        LieAlgebra::spin(x, &self.ad)
    }

    pub fn ad_matrices(&self) -> &[Matrix] {
        &self.ad
    }

    pub fn series(&self, kind: SeriesKind) -> Series {
        let mut terms = alloc::vec![self.whole()];
        loop {
            let last = terms.last().unwrap();
            if last.is_zero() {
                return Series {
                    terms,
                    reaches_zero: true,
                };
            }
            let next = match kind {
                SeriesKind::Derived => self.bracket_subspaces(last, last),
                SeriesKind::LowerCentral => self.bracket_subspaces(last, &self.whole()),
            };
            if next == *last {
                return Series {
                    terms,
                    reaches_zero: false,
                };
            }
            terms.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).reaches_zero
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral).reaches_zero
    }

    /// Gram matrix of `tr(ad x ad y)` on the basis.
    pub fn killing_form(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.dim, self.dim, |i, j| {
            self.ad[i].mul(&self.ad[j]).trace()
        })
    }

    /// `tr(ad x ad y)`.
    pub fn killing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let k = self.killing_form();
        let kx = k.mul_vec(y);
        let mut acc = self.field.zero();
        for (a, b) in x.iter().zip(&kx) {
            acc += &(a * b);
        }
        acc
    }

    /// Elements of `within` orthogonal to all of `to` under the Killing form.
    pub fn killing_orthogonal(&self, within: &Subspace, to: &Subspace) -> Subspace {
        let k = self.killing_form();
        // x = sum c_i w_i with kappa(x, t) = 0 for every t in `to`.
        let rows: Vec<Vector> = to
            .basis()
            .iter()
            .map(|t| {
                let kt = k.mul_vec(t);
                within
                    .basis()
                    .iter()
                    .map(|w| {
                        let mut acc = self.field.zero();
                        for (a, b) in w.iter().zip(&kt) {
                            acc += &(a * b);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        if rows.is_empty() {
            return within.clone();
        }
        let m = Matrix::from_rows(&self.field, within.dim(), &rows);
        let vs: Vec<Vector> = m
            .kernel()
            .iter()
            .map(|c| linalg::combine(&self.field, self.dim, c, within.basis()))
            .collect();
        Subspace::span(&self.field, self.dim, &vs)
    }

    /// The solvable radical `{x : κ(x, [L, L]) = 0}`, verified to be a
    /// solvable ideal.
    pub fn solvable_radical(&self) -> Result<Subspace, LieError> {
        let derived = self.bracket_subspaces(&self.whole(), &self.whole());
        let r = self.killing_orthogonal(&self.whole(), &derived);
        if !self.is_ideal(&r) {
            return Err(LieError::RadicalCheck("not an ideal"));
        }
        let mut cur = r.clone();
        while !cur.is_zero() {
            let next = self.bracket_subspaces(&cur, &cur);
            if next == cur {
                return Err(LieError::RadicalCheck("not solvable"));
            }
            cur = next;
        }
        Ok(r)
    }

    /// `{x ∈ L : [x, I] ⊆ J}` for ideals `J ⊆ I`.
    pub fn annihilator(&self, i: &Subspace, j: &Subspace) -> Result<Subspace, LieError> {
        if !i.contains(j).map_err(|_| LieError::NotNested)? {
            return Err(LieError::NotNested);
        }
        if !self.is_ideal(i) || !self.is_ideal(j) {
            return Err(LieError::NotIdeal);
        }
        Ok(self.annihilator_unchecked(i, j))
    }

    /// Same as [`LieAlgebra::annihilator`] without the ideal checks; used for
    /// subalgebra-module sections.
    pub fn annihilator_unchecked(&self, i: &Subspace, j: &Subspace) -> Subspace {
        let mut acc = self.whole();
        for v in i.basis() {
            // [x, v] = -ad(v) x must lie in J
            let pre = Subspace::preimage(&self.ad(v), j);
            acc = acc.intersect(&pre).expect("same ambient");
        }
        acc
    }

    pub fn center(&self) -> Subspace {
        self.annihilator_unchecked(&self.whole(), &self.zero_subspace())
    }

    /// Centralizer of `b` inside `within`: `{x ∈ within : [x, b] = 0}`.
    pub fn centralizer(&self, b: &Subspace, within: &Subspace) -> Subspace {
        self.annihilator_unchecked(b, &self.zero_subspace())
            .intersect(within)
            .expect("same ambient")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::linalg::tests::int_vec;
    use alloc::string::ToString;
    use proptest::prelude::*;

    pub fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    /// sl2 with basis e, h, f: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    pub fn sl2() -> LieAlgebra {
        let q = Field::rationals();
        LieAlgebra::from_brackets(
            &q,
            names(&["e", "h", "f"]),
            &[
                (0, 2, int_vec(&q, &[0, 1, 0])),
                (1, 0, int_vec(&q, &[2, 0, 0])),
                (1, 2, int_vec(&q, &[0, 0, -2])),
            ],
        )
        .unwrap()
    }

    pub fn heisenberg() -> LieAlgebra {
        let q = Field::rationals();
        LieAlgebra::from_brackets(&q, names(&["x", "y", "z"]), &[(0, 1, int_vec(&q, &[0, 0, 1]))]).unwrap()
    }

    /// gl2 with basis e11, e22, e12, e21.
    pub fn gl2() -> LieAlgebra {
        let q = Field::rationals();
        LieAlgebra::from_brackets(
            &q,
            names(&["e11", "e22", "e12", "e21"]),
            &[
                (0, 2, int_vec(&q, &[0, 0, 1, 0])),
                (0, 3, int_vec(&q, &[0, 0, 0, -1])),
                (1, 2, int_vec(&q, &[0, 0, -1, 0])),
                (1, 3, int_vec(&q, &[0, 0, 0, 1])),
                (2, 3, int_vec(&q, &[1, -1, 0, 0])),
            ],
        )
        .unwrap()
    }

    /// Metabelian a_1..a_m, b_1..b_m with [a_i, b_i] = b_i.
    pub fn metabelian(m: usize) -> LieAlgebra {
        let q = Field::rationals();
        let mut ns = Vec::new();
        for i in 1..=m {
            ns.push(alloc::format!("a{}", i));
        }
        for i in 1..=m {
            ns.push(alloc::format!("b{}", i));
        }
        let br: Vec<_> = (0..m)
            .map(|i| (i, m + i, linalg::unit_vector(&q, 2 * m, m + i)))
            .collect();
        LieAlgebra::from_brackets(&q, ns, &br).unwrap()
    }

    #[test]
    fn sl2_brackets_and_validation() {
        let l = sl2();
        assert_eq!(l.bracket(&l.basis_vector(0), &l.basis_vector(2)), l.basis_vector(1));
        assert!(l.validate().passed());
        assert!(heisenberg().validate().passed());
    }

    #[test]
    fn one_sided_perturbation_is_rejected() {
        let q = Field::rationals();
        let err = LieAlgebra::from_brackets(
            &q,
            names(&["e", "h", "f"]),
            &[
                (0, 2, int_vec(&q, &[0, 2, 0])),
                (2, 0, int_vec(&q, &[0, -1, 0])),
                (1, 0, int_vec(&q, &[2, 0, 0])),
                (1, 2, int_vec(&q, &[0, 0, -2])),
            ],
        )
        .unwrap_err();
        assert_eq!(err, LieError::Antisymmetry("f".into(), "e".into()));
    }

    #[test]
    fn jacobi_failure_names_triple() {
        let q = Field::rationals();
        // [x,y] = x, [y,z] = x, [x,z] = y is not a Lie algebra
        let l = LieAlgebra::from_brackets(
            &q,
            names(&["x", "y", "z"]),
            &[
                (0, 1, int_vec(&q, &[1, 0, 0])),
                (1, 2, int_vec(&q, &[1, 0, 0])),
                (0, 2, int_vec(&q, &[0, 1, 0])),
            ],
        )
        .unwrap();
        match l.validate() {
            JacobiReport::Fail { triple, .. } => assert_eq!(triple, (0, 1, 2)),
            JacobiReport::Pass => panic!("expected failure"),
        }
    }

    #[test]
    fn metabelian_brackets_and_series() {
        let l = metabelian(2);
        assert_eq!(l.bracket(&l.basis_vector(0), &l.basis_vector(2)), l.basis_vector(2));
        assert!(linalg::is_zero_vec(&l.bracket(&l.basis_vector(0), &l.basis_vector(3))));
        let d = l.series(SeriesKind::Derived);
        assert!(d.reaches_zero);
        assert_eq!(d.terms.len(), 3);
        assert_eq!(d.terms[1], Subspace::coordinate(l.field(), 4, &[2, 3]));
        assert_eq!(l.bracket_subspaces(&l.whole(), &l.whole()), d.terms[1]);
    }

    #[test]
    fn heisenberg_lower_central_index() {
        let l = heisenberg();
        let s = l.series(SeriesKind::LowerCentral);
        assert_eq!(s.terms.len(), 3);
        assert_eq!(s.terms[1], Subspace::coordinate(l.field(), 3, &[2]));
        assert_eq!(s.index(), Some(3));
        assert_eq!(l.center(), Subspace::coordinate(l.field(), 3, &[2]));
        assert!(l.killing_form().is_zero());
    }

    #[test]
    fn sl2_is_not_solvable_and_has_nondegenerate_form() {
        let l = sl2();
        assert!(!l.series(SeriesKind::Derived).reaches_zero);
        // hand oracle: kappa(e,f) = 4, kappa(h,h) = 8
        let k = l.killing_form();
        assert_eq!(k[(0, 2)], l.field().from_int(4));
        assert_eq!(k[(1, 1)], l.field().from_int(8));
        assert_eq!(k.det().unwrap(), l.field().from_int(-128));
        assert!(l.solvable_radical().unwrap().is_zero());
        let e = Subspace::coordinate(l.field(), 3, &[0]);
        assert_eq!(l.ideal_closure(&e), l.whole());
    }

    #[test]
    fn radicals_and_annihilators() {
        let g = gl2();
        let center = Subspace::span(g.field(), 4, &[int_vec(g.field(), &[1, 1, 0, 0])]);
        assert_eq!(g.solvable_radical().unwrap(), center);
        assert_eq!(g.center(), center);
        let m = metabelian(2);
        assert_eq!(m.solvable_radical().unwrap(), m.whole());
        let b = Subspace::coordinate(m.field(), 4, &[2, 3]);
        let ann = m.annihilator(&b, &m.zero_subspace()).unwrap();
        assert_eq!(ann, b);
        let s = sl2();
        assert!(s.annihilator(&s.whole(), &s.zero_subspace()).unwrap().is_zero());
        assert_eq!(s.annihilator(&s.whole(), &s.whole()).unwrap(), s.whole());
    }

    proptest! {
        #[test]
        fn jacobi_and_invariance_on_random_vectors(
            a in proptest::collection::vec(-3i64..=3, 4),
            b in proptest::collection::vec(-3i64..=3, 4),
            c in proptest::collection::vec(-3i64..=3, 4),
        ) {
            let g = gl2();
            let f = g.field().clone();
            let (a, b, c) = (int_vec(&f, &a), int_vec(&f, &b), int_vec(&f, &c));
            let t = linalg::vec_add(
                &linalg::vec_add(&g.bracket(&a, &g.bracket(&b, &c)), &g.bracket(&b, &g.bracket(&c, &a))),
                &g.bracket(&c, &g.bracket(&a, &b)),
            );
            prop_assert!(linalg::is_zero_vec(&t));
            prop_assert!(linalg::is_zero_vec(&g.bracket(&a, &a)));
            prop_assert_eq!(g.killing(&g.bracket(&a, &b), &c), g.killing(&a, &g.bracket(&b, &c)));
        }
    }
}
