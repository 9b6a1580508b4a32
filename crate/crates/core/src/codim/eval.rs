//! Multilinear evaluation of decorated Lie monomials on a Lie algebra.
//!
//! A monomial in `n` variables is stored as an `n`-linear map `L^n -> L`,
//! vectorized with column `((i_1 d + i_2) ... ) d + k`.

use alloc::vec;
use alloc::vec::Vec;

use crate::lie::LieAlgebra;
use crate::linalg::sparse::SparseRow;
use crate::linalg::{Matrix, Vector};
use crate::polys::{LeftNormedMonomial, LiePoly, LieTree};
use crate::scalar::{Field, Scalar};
use crate::symmetry::{SymmetryDatum, SymmetryKind};

use super::{CodimError, Flavor};

type SparseVec = Vec<(usize, Scalar)>;

/// The operators substituted for decorated variables: `A_g` is `ρ(g)` for
/// actions and the projection onto `L^{(g)}` for gradings.
#[derive(Clone, Debug)]
pub struct Operators {
    field: Field,
    dim: usize,
    mats: Vec<Matrix>,
    /// `cols[g][j] = A_g e_j`, sparse
    cols: Vec<Vec<SparseVec>>,
    /// `table[i][j] = [e_i, e_j]`, sparse
    table: Vec<Vec<SparseVec>>,
}

fn sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

impl Operators {
    pub fn new(l: &LieAlgebra, datum: &SymmetryDatum, flavor: Flavor) -> Result<Operators, CodimError> {
        let f = l.field();
        let d = l.dim();
        let mats = match (flavor, &datum.kind) {
            (Flavor::Ordinary, _) => vec![Matrix::identity(f, d)],
            (Flavor::GAction, SymmetryKind::Grading(_)) => return Err(CodimError::FlavorMismatch(flavor)),
            (Flavor::GAction, _) => datum.action_matrices(l).expect("action or none"),
            (Flavor::Graded, SymmetryKind::Grading(gr)) => {
                (0..datum.group.order()).map(|g| gr.projection(f, g)).collect()
            }
            (Flavor::Graded, SymmetryKind::None) => vec![Matrix::identity(f, d); datum.group.order()],
            (Flavor::Graded, SymmetryKind::Action(_)) => return Err(CodimError::FlavorMismatch(flavor)),
        };
        Ok(Operators::from_matrices(l, mats))
    }

    pub fn from_matrices(l: &LieAlgebra, mats: Vec<Matrix>) -> Operators {
        let d = l.dim();
        let cols = mats.iter().map(|m| (0..d).map(|j| sparse(&m.column(j))).collect()).collect();
        let table = (0..d)
            .map(|i| (0..d).map(|j| sparse(l.bracket_basis(i, j))).collect())
            .collect();
        Operators {
            field: l.field().clone(),
            dim: d,
            mats,
            cols,
            table,
        }
    }

    /// Number of decorations, `|G|` (or 1 for the ordinary flavor).
    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = vec![self.field.zero(); self.dim];
        let mut touched = false;
        for (i, x) in a {
            for (j, y) in b {
                let t = &self.table[*i][*j];
                if t.is_empty() {
                    continue;
                }
                let c = x * y;
                for (k, z) in t {
                    acc[*k] += &(&c * z);
                    touched = true;
                }
            }
        }
        if !touched {
            return Vec::new();
        }
        sparse(&acc)
    }

    fn apply_deco(&self, deco: Option<usize>, j: usize) -> SparseVec {
        match deco {
            None => vec![(j, self.field.one())],
            Some(g) => self.cols[g][j].clone(),
        }
    }

    /// Value of a bracket tree with `x_t` replaced by `A_deco e_{subst[t-1]}`.
    pub fn eval_tree(&self, tree: &LieTree, subst: &[usize]) -> SparseVec {
        match tree {
            LieTree::Leaf(v) => self.apply_deco(v.deco, subst[v.index - 1]),
            LieTree::Node(a, b) => {
                let x = self.eval_tree(a, subst);
                if x.is_empty() {
                    return x;
                }
                let y = self.eval_tree(b, subst);
                if y.is_empty() {
                    return y;
                }
                self.bracket(&x, &y)
            }
        }
    }

    /// Value of a Lie polynomial at a basis substitution, as a dense vector.
    pub fn eval_poly(&self, p: &LiePoly, subst: &[usize]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim];
        for (tree, c) in p.terms() {
            for (k, x) in self.eval_tree(tree, subst) {
                out[k] += &x.scale(c);
            }
        }
        out
    }

    /// All nonzero values `[A_{g_1} e_{j_1}, ..., A_{g_n} e_{j_n}]`, grouped by
    /// decoration tuple (mixed radix, first slot most significant). Entries are
    /// `(j code, k, value)` with `j code = ((j_1 d + j_2) ...) d + j_n`.
    pub fn base_tensors(&self, n: usize) -> Vec<Vec<(u64, u32, Scalar)>> {
        let groups = self.len();
        let total = groups.pow(n as u32);
        let mut out = vec![Vec::new(); total];
        if n == 0 {
            return out;
        }
        for g in 0..groups {
            for j in 0..self.dim {
                let v = self.cols[g][j].clone();
                if !v.is_empty() {
                    self.dfs(n, 1, g, j as u64, v, &mut out);
                }
            }
        }
        out
    }

    fn dfs(&self, n: usize, depth: usize, gcode: usize, jcode: u64, prefix: SparseVec, out: &mut [Vec<(u64, u32, Scalar)>]) {
        if depth == n {
            for (k, x) in prefix {
                out[gcode].push((jcode, k as u32, x));
            }
            return;
        }
        let groups = self.len();
        for g in 0..groups {
            for j in 0..self.dim {
                let v = &self.cols[g][j];
                if v.is_empty() {
                    continue;
                }
                let next = self.bracket(&prefix, v);
                if next.is_empty() {
                    continue;
                }
                self.dfs(n, depth + 1, gcode * groups + g, jcode * self.dim as u64 + j as u64, next, out);
            }
        }
    }
}

/// Base-`d` digits of a tuple code, most significant first.
pub fn decode(mut code: u64, n: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for t in (0..n).rev() {
        out[t] = (code % d as u64) as usize;
        code /= d as u64;
    }
    out
}

pub fn encode(digits: &[usize], d: usize) -> u64 {
    digits.iter().fold(0u64, |acc, &x| acc * d as u64 + x as u64)
}

/// Row of the monomial `(σ, g)` from the base tensor of `g`: column
/// `(i, k)` carries `B_g[(i_{σ(1)}, ..., i_{σ(n)}), k]`.
pub fn monomial_row(base: &[(u64, u32, Scalar)], sigma: &crate::perm::Perm, d: usize) -> SparseRow {
    let n = sigma.degree();
    let mut i = vec![0usize; n];
    let mut row: Vec<(u32, Scalar)> = base
        .iter()
        .map(|(jcode, k, x)| {
            let j = decode(*jcode, n, d);
            for t in 0..n {
                i[sigma.apply(t)] = j[t];
            }
            let col = encode(&i, d) * d as u64 + *k as u64;
            (u32::try_from(col).expect("column index fits in 32 bits"), x.clone())
        })
        .collect();
    row.sort_unstable_by_key(|e| e.0);
    row
}

/// Dense evaluation vector of a single monomial, length `d^{n+1}`.
pub fn evaluation_vector(ops: &Operators, mono: &LeftNormedMonomial) -> Vector {
    let n = mono.sigma.degree();
    let d = ops.dim();
    let len = d.pow(n as u32 + 1);
    let mut out = vec![ops.field.zero(); len];
    let tree = mono.to_tree();
    let mut subst = vec![0usize; n];
    for code in 0..d.pow(n as u32) as u64 {
        let digits = decode(code, n, d);
        subst.copy_from_slice(&digits);
        for (k, x) in ops.eval_tree(&tree, &subst) {
            out[code as usize * d + k] = x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::tests::{gl2, sl2};
    use crate::linalg::is_zero_vec;
    use crate::perm::all_perms;
    use crate::polys::{spanning_monomials, Var};
    use crate::symmetry::{FiniteGroup, Grading};

    #[test]
    fn degree_one_is_the_identity_map() {
        let l = sl2();
        let ops = Operators::new(&l, &SymmetryDatum::none(), Flavor::Ordinary).unwrap();
        let m = spanning_monomials(1, 1).next().unwrap();
        let v = evaluation_vector(&ops, &m);
        let want: Vec<Scalar> = (0..9).map(|c| l.field().from_int((c / 3 == c % 3) as i64)).collect();
        assert_eq!(v, want);
    }

    #[test]
    fn even_part_of_graded_gl2_is_commutative() {
        let l = gl2();
        let z2 = FiniteGroup::abelian(&[2], Some(vec!["0".into(), "1".into()])).unwrap();
        let datum = SymmetryDatum::grading(z2, Grading { labels: vec![0, 0, 1, 1] });
        let ops = Operators::new(&l, &datum, Flavor::Graded).unwrap();
        let m = LeftNormedMonomial {
            sigma: crate::perm::Perm::identity(2),
            decorations: vec![0, 0],
        };
        assert!(is_zero_vec(&evaluation_vector(&ops, &m)));
        let m = LeftNormedMonomial {
            sigma: crate::perm::Perm::identity(2),
            decorations: vec![0, 1],
        };
        assert!(!is_zero_vec(&evaluation_vector(&ops, &m)));
    }

    #[test]
    fn rows_from_base_tensors_match_direct_evaluation() {
        let l = sl2();
        let ops = Operators::new(&l, &SymmetryDatum::none(), Flavor::Ordinary).unwrap();
        let n = 3;
        let base = ops.base_tensors(n);
        for sigma in all_perms(n) {
            let m = LeftNormedMonomial {
                sigma: sigma.clone(),
                decorations: vec![0; n],
            };
            let dense = evaluation_vector(&ops, &m);
            let row = monomial_row(&base[0], &sigma, 3);
            let want: Vec<(u32, Scalar)> = dense
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(c, x)| (c as u32, x.clone()))
                .collect();
            assert_eq!(row, want);
        }
    }

    #[test]
    fn polynomial_evaluation_is_linear() {
        let l = sl2();
        let ops = Operators::new(&l, &SymmetryDatum::none(), Flavor::Ordinary).unwrap();
        let p = LiePoly::var(Var::plain(1)).bracket(&LiePoly::var(Var::plain(2)));
        // [e, f] = h
        assert_eq!(ops.eval_poly(&p, &[0, 2]), vec![l.field().zero(), l.field().one(), l.field().zero()]);
        let q = p.add(&LiePoly::var(Var::plain(2)).bracket(&LiePoly::var(Var::plain(1))));
        assert!(is_zero_vec(&ops.eval_poly(&q, &[0, 2])));
    }
}
