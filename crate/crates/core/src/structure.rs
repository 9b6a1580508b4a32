//! Levi decomposition data: radical `R`, semisimple part `B`, nilradical
//! `N` and a `G`-invariant complement `S` with `R = S ⊕ N`, `[B, S] = 0`.

use alloc::vec::Vec;

use crate::lie::{LieAlgebra, LieError};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::symmetry::{FiniteGroup, GroupAction};

/// User-supplied structure, used only where it cannot be computed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Annotations {
    pub levi_basis: Option<Vec<Vector>>,
    pub nilradical_basis: Option<Vec<Vector>>,
    /// basis indices permuted by the group, for the orbit formula
    pub orbit_basis: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("the Killing form is degenerate and the radical is proper: a levi_basis annotation is required")]
    LeviRequired,
    #[error("levi_basis annotation rejected: {0}")]
    BadLevi(&'static str),
    #[error("the nilradical could not be determined: a nilradical_basis annotation is required")]
    NilradicalRequired,
    #[error("nilradical_basis annotation rejected: {0}")]
    BadNilradical(&'static str),
    #[error("complement construction failed: {0}")]
    Complement(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub radical: Subspace,
    pub levi: Subspace,
    pub nilradical: Subspace,
    pub complement: Subspace,
    /// least `p` with all products of `p` elements of `N` zero
    pub nilpotency_index: usize,
}

/// Least `p` with `N^p = 0`, where `N^1 = N`.
pub fn nilpotency_index(l: &LieAlgebra, n: &Subspace) -> Option<usize> {
    let mut cur = n.clone();
    let mut p = 1;
    while !cur.is_zero() {
        let next = l.bracket_subspaces(&cur, n);
        if next == cur {
            return None;
        }
        cur = next;
        p += 1;
    }
    Some(p)
}

/// Whether every `ρ(g)` maps `x` into itself.
pub fn is_invariant(x: &Subspace, rho: &GroupAction) -> bool {
    rho.matrices.iter().all(|m| x.basis().iter().all(|v| x.contains_vec(&m.mul_vec(v))))
}

fn levi(l: &LieAlgebra, r: &Subspace, rho: &GroupAction, ann: &Annotations) -> Result<Subspace, StructureError> {
    if r.is_zero() {
        return Ok(l.whole());
    }
    if r.is_full() {
        return Ok(l.zero_subspace());
    }
    let vs = ann.levi_basis.as_ref().ok_or(StructureError::LeviRequired)?;
    if vs.iter().any(|v| v.len() != l.dim()) {
        return Err(StructureError::BadLevi("vector length differs from the dimension"));
    }
    let b = Subspace::span(l.field(), l.dim(), vs);
    if b.dim() + r.dim() != l.dim() || !b.intersect(r).expect("same ambient").is_zero() {
        return Err(StructureError::BadLevi("not a complement of the radical"));
    }
    if !l.is_subalgebra(&b) {
        return Err(StructureError::BadLevi("not a subalgebra"));
    }
    if !is_invariant(&b, rho) {
        return Err(StructureError::BadLevi("not invariant under the group"));
    }
    Ok(b)
}

fn is_nilpotent_ideal(l: &LieAlgebra, n: &Subspace) -> bool {
    l.is_ideal(n) && nilpotency_index(l, n).is_some()
}

/// The Killing-orthogonal part of `R` contains every nilpotent ideal; when it
/// is itself a nilpotent ideal it is the nilradical.
fn nilradical(l: &LieAlgebra, r: &Subspace, ann: &Annotations) -> Result<Subspace, StructureError> {
    let lr = l.bracket_subspaces(&l.whole(), r);
    let k = l.killing_orthogonal(r, r);
    if is_nilpotent_ideal(l, &k) && k.contains(&lr).expect("same ambient") {
        return Ok(k);
    }
    let vs = ann.nilradical_basis.as_ref().ok_or(StructureError::NilradicalRequired)?;
    if vs.iter().any(|v| v.len() != l.dim()) {
        return Err(StructureError::BadNilradical("vector length differs from the dimension"));
    }
    let n = Subspace::span(l.field(), l.dim(), vs);
    if !is_nilpotent_ideal(l, &n) {
        return Err(StructureError::BadNilradical("not a nilpotent ideal"));
    }
    if !n.contains(&lr).expect("same ambient") || !k.contains(&n).expect("same ambient") {
        return Err(StructureError::BadNilradical("must contain [L, R]"));
    }
    Ok(n)
}

pub fn analyze(
    l: &LieAlgebra,
    group: &FiniteGroup,
    rho: &GroupAction,
    ann: &Annotations,
) -> Result<Structure, StructureError> {
    let radical = l.solvable_radical()?;
    let levi = levi(l, &radical, rho, ann)?;
    let nilradical = nilradical(l, &radical, ann)?;
    let c = complement(l, &radical, &nilradical, &levi, group, rho)?;
    if !l.bracket_subspaces(&levi, &c.complement).is_zero() {
        return Err(StructureError::Complement("[B, S] is not zero"));
    }
    let nilpotency_index = nilpotency_index(l, &nilradical).expect("verified nilpotent");
    Ok(Structure {
        radical,
        levi,
        nilradical,
        complement: c.complement,
        nilpotency_index,
    })
}

/// A `G`-invariant `B`-submodule complement of `J` in `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub complement: Subspace,
    /// `π̃` on `L`: the averaged projection of `I` onto `J`, zero off `I`
    pub projection: Matrix,
    /// `1 + dim Hom_{B,G}(I/J, J)`; 1 means the complement is unique
    pub multiplicity: usize,
    pub g_equivariant: bool,
    pub b_equivariant: bool,
    pub kernel_complement: bool,
}

fn coords(basis: &[Vector], v: &[crate::scalar::Scalar]) -> Vector {
    let f = v[0].field();
    let m = Matrix::from_cols(f, v.len(), basis);
    m.solve(v).expect("vector lies in the span")
}

/// Linear conditions on `φ : I -> J` (unknowns `φ[k][i]`, row `k` of the
/// `J`-coordinates of `φ(v_i)`) expressing commutation with `ops`.
fn commutation_rows(ib: &[Vector], jb: &[Vector], ops: &[Matrix]) -> Vec<Vector> {
    let f = ib[0][0].field().clone();
    let (s, t) = (ib.len(), jb.len());
    let var = |k: usize, i: usize| k * s + i;
    let mut rows = Vec::new();
    for x in ops {
        // matrices of x on I and on J in the chosen bases
        let xi: Vec<Vector> = ib.iter().map(|v| coords(ib, &x.mul_vec(v))).collect();
        let xj: Vec<Vector> = jb.iter().map(|v| coords(jb, &x.mul_vec(v))).collect();
        // φ(x v_i) = x φ(v_i), compared in J-coordinate k
        for i in 0..s {
            for k in 0..t {
                let mut row = linalg::zero_vector(&f, s * t);
                for (i2, c) in xi[i].iter().enumerate() {
                    row[var(k, i2)] += c;
                }
                for (k2, xk) in xj.iter().enumerate() {
                    row[var(k2, i)] -= &xk[k];
                }
                if !linalg::is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Builds the complement from a `B`-equivariant projection `I -> J` averaged
/// over the group, and records the checks on `π̃`.
pub fn complement(
    l: &LieAlgebra,
    i: &Subspace,
    j: &Subspace,
    b: &Subspace,
    group: &FiniteGroup,
    rho: &GroupAction,
) -> Result<Complement, StructureError> {
    let f = l.field();
    let d = l.dim();
    if !i.contains(j).expect("same ambient") {
        return Err(StructureError::Complement("J is not contained in I"));
    }
    let bops: Vec<Matrix> = b.basis().iter().map(|x| l.ad(x)).collect();
    if j.is_zero() || i == j {
        let complement = if j.is_zero() { i.clone() } else { Subspace::zero(f, d) };
        let projection = if j.is_zero() {
            Matrix::zeros(f, d, d)
        } else {
            restricted_identity(l, i)
        };
        return Ok(Complement {
            complement,
            projection,
            multiplicity: 1,
            g_equivariant: true,
            b_equivariant: true,
            kernel_complement: true,
        });
    }
    // basis of I: J's basis first, then a completion
    let mut ib: Vec<Vector> = j.basis().to_vec();
    ib.extend(j.extend_to(i).expect("same ambient"));
    let jb = j.basis();
    let (s, t) = (ib.len(), jb.len());
    let mut rows = commutation_rows(&ib, jb, &bops);
    let homogeneous = rows.len();
    let mut rhs = alloc::vec![f.zero(); homogeneous];
    // φ(w_k) = w_k on J
    for k0 in 0..t {
        for k in 0..t {
            let mut row = linalg::zero_vector(f, s * t);
            row[k * s + k0] = f.one();
            rows.push(row);
            rhs.push(if k == k0 { f.one() } else { f.zero() });
        }
    }
    let sys = Matrix::from_rows(f, s * t, &rows);
    let sol = sys
        .solve(&rhs)
        .ok_or(StructureError::Complement("no B-equivariant projection exists"))?;
    // π as a d x d matrix: π(x) for x ∈ I, extended by zero on a complement of I
    let pi_on_i: Vec<Vector> = (0..s)
        .map(|c| {
            let coeffs: Vec<_> = (0..t).map(|k| sol[k * s + c].clone()).collect();
            linalg::combine(f, d, &coeffs, jb)
        })
        .collect();
    let pi = extend_by_zero(l, &ib, &pi_on_i);
    let tilde = crate::symmetry::average_projection(&pi, rho, group);
    let kernel = Subspace::kernel_of(&tilde).intersect(i).expect("same ambient");
    let complement = kernel;
    let kernel_complement = complement.dim() + j.dim() == i.dim()
        && complement.intersect(j).expect("same ambient").is_zero()
        && j.basis().iter().all(|w| tilde.mul_vec(w) == *w)
        && i.basis().iter().all(|v| j.contains_vec(&tilde.mul_vec(v)));
    let g_equivariant = rho.matrices.iter().all(|g| {
        i.basis().iter().all(|v| tilde.mul_vec(&g.mul_vec(v)) == g.mul_vec(&tilde.mul_vec(v)))
    });
    let b_equivariant = bops
        .iter()
        .all(|x| i.basis().iter().all(|v| tilde.mul_vec(&x.mul_vec(v)) == x.mul_vec(&tilde.mul_vec(v))));
    if !(kernel_complement && g_equivariant && b_equivariant) {
        return Err(StructureError::Complement("averaged projection failed its checks"));
    }
    // freedom: φ vanishing on J and commuting with B and G
    let mut hom = rows[..homogeneous].to_vec();
    hom.extend(commutation_rows(&ib, jb, &rho.matrices));
    for k0 in 0..t {
        for k in 0..t {
            let mut row = linalg::zero_vector(f, s * t);
            row[k * s + k0] = f.one();
            hom.push(row);
        }
    }
    let freedom = s * t - Matrix::from_rows(f, s * t, &hom).rank();
    Ok(Complement {
        complement,
        projection: tilde,
        multiplicity: 1 + freedom,
        g_equivariant,
        b_equivariant,
        kernel_complement,
    })
}

/// Matrix sending `ib[c]` to `images[c]` and a standard complement of
/// `span(ib)` to zero.
fn extend_by_zero(l: &LieAlgebra, ib: &[Vector], images: &[Vector]) -> Matrix {
    let f = l.field();
    let d = l.dim();
    let span = Subspace::span(f, d, ib);
    let mut domain = ib.to_vec();
    domain.extend(span.standard_complement());
    let mut targets = images.to_vec();
    targets.resize(d, linalg::zero_vector(f, d));
    let p = Matrix::from_cols(f, d, &domain);
    let q = Matrix::from_cols(f, d, &targets);
    q.mul(&p.inverse().expect("basis of L"))
}

fn restricted_identity(l: &LieAlgebra, i: &Subspace) -> Matrix {
    extend_by_zero(l, i.basis(), i.basis())
}

/// `Ann(I/J)` against `Ann_B ⊕ Ann_S ⊕ N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnDecomposition {
    pub ann: Subspace,
    pub ann_b: Subspace,
    pub ann_s: Subspace,
    pub nilradical: Subspace,
    pub holds: bool,
}

pub fn ann_decomposition_check(l: &LieAlgebra, st: &Structure, i: &Subspace, j: &Subspace) -> AnnDecomposition {
    let ann = l.annihilator_unchecked(i, j);
    let ann_b = ann.intersect(&st.levi).expect("same ambient");
    let ann_s = ann.intersect(&st.complement).expect("same ambient");
    let sum = ann_b
        .sum(&ann_s)
        .and_then(|x| x.sum(&st.nilradical))
        .expect("same ambient");
    let direct = ann_b.dim() + ann_s.dim() + st.nilradical.dim() == sum.dim();
    let holds = direct && sum == ann;
    AnnDecomposition {
        ann,
        ann_b,
        ann_s,
        nilradical: st.nilradical.clone(),
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use alloc::vec;
    use crate::lie::tests::{gl2, heisenberg, metabelian, sl2};
    use crate::linalg::tests::int_vec;

    fn trivial(l: &LieAlgebra) -> (FiniteGroup, GroupAction) {
        (FiniteGroup::trivial(), GroupAction::trivial(l.field(), l.dim()))
    }

    #[test]
    fn semisimple_and_solvable_need_no_annotation() {
        let l = sl2();
        let (g, rho) = trivial(&l);
        let st = analyze(&l, &g, &rho, &Annotations::default()).unwrap();
        assert!(st.levi.is_full() && st.radical.is_zero() && st.nilradical.is_zero());
        assert_eq!(st.nilpotency_index, 1);

        let l = metabelian(2);
        let (g, rho) = trivial(&l);
        let st = analyze(&l, &g, &rho, &Annotations::default()).unwrap();
        assert!(st.levi.is_zero() && st.radical.is_full());
        assert_eq!(st.nilradical, Subspace::coordinate(l.field(), 4, &[2, 3]));
        assert_eq!(st.complement.dim(), 2);
        assert_eq!(st.nilpotency_index, 2);

        let l = heisenberg();
        let (g, rho) = trivial(&l);
        let st = analyze(&l, &g, &rho, &Annotations::default()).unwrap();
        assert!(st.nilradical.is_full());
        assert_eq!(st.nilpotency_index, 3);
    }

    #[test]
    fn gl2_needs_and_checks_a_levi_annotation() {
        let l = gl2();
        let q = l.field().clone();
        let (g, rho) = trivial(&l);
        assert_eq!(
            analyze(&l, &g, &rho, &Annotations::default()),
            Err(StructureError::LeviRequired)
        );
        let ann = Annotations {
            levi_basis: Some(vec![int_vec(&q, &[1, -1, 0, 0]), int_vec(&q, &[0, 0, 1, 0]), int_vec(&q, &[0, 0, 0, 1])]),
            ..Default::default()
        };
        let st = analyze(&l, &g, &rho, &ann).unwrap();
        // the center is a nilpotent ideal, so N = R and S = 0
        assert_eq!(st.nilradical, st.radical);
        assert!(st.complement.is_zero());
        let bad = Annotations {
            levi_basis: Some(vec![int_vec(&q, &[1, 0, 0, 0]), int_vec(&q, &[0, 0, 1, 0]), int_vec(&q, &[0, 0, 0, 1])]),
            ..Default::default()
        };
        assert!(matches!(analyze(&l, &g, &rho, &bad), Err(StructureError::BadLevi(_))));
    }

    #[test]
    fn swap_average_on_the_plane() {
        // L abelian of dim 2, swap action, project onto span{e1}
        let q = crate::scalar::Field::rationals();
        let l = LieAlgebra::abelian(&q, 2);
        let g = FiniteGroup::abelian(&[2], None).unwrap();
        let swap = crate::linalg::tests::int_matrix(&q, &[&[0, 1], &[1, 0]]);
        let rho = GroupAction {
            matrices: vec![Matrix::identity(&q, 2), swap],
        };
        let pi = crate::linalg::tests::int_matrix(&q, &[&[1, 0], &[0, 0]]);
        let tilde = crate::symmetry::average_projection(&pi, &rho, &g);
        let half = q.from_rational(Rational::new(1.into(), 2.into()));
        assert_eq!(tilde, Matrix::identity(&q, 2).scale(&half));
        // with a swap-invariant target the averaged projection keeps it
        let i = l.whole();
        let j = Subspace::span(&q, 2, &[int_vec(&q, &[1, 1])]);
        let c = complement(&l, &i, &j, &l.zero_subspace(), &g, &rho).unwrap();
        assert_eq!(c.complement, Subspace::span(&q, 2, &[int_vec(&q, &[1, -1])]));
        assert!(c.g_equivariant && c.kernel_complement);
        assert_eq!(c.multiplicity, 1);
    }

    #[test]
    fn annihilator_decomposition() {
        let l = metabelian(2);
        let (g, rho) = trivial(&l);
        let st = analyze(&l, &g, &rho, &Annotations::default()).unwrap();
        let b1 = Subspace::coordinate(l.field(), 4, &[2]);
        let r = ann_decomposition_check(&l, &st, &b1, &l.zero_subspace());
        assert!(r.holds);
        assert_eq!(r.ann.dim(), 3);
        let l = sl2();
        let (g, rho) = trivial(&l);
        let st = analyze(&l, &g, &rho, &Annotations::default()).unwrap();
        let r = ann_decomposition_check(&l, &st, &l.whole(), &l.zero_subspace());
        assert!(r.holds && r.ann.is_zero());
    }
}
