//! The integer `d(L)`: a composition chain of `G`-invariant ideals with
//! irreducible sections, canonical complements, the nonvanishing condition
//! on nested commutators, and annihilator intersections.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::lie::LieAlgebra;
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::structure::{self, Annotations, Structure, StructureError};
use crate::symmetry::{self, FiniteGroup, GroupAction, SymmetryDatum, SymmetryError, SymmetryKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentConfig {
    /// bound on each `q_i`; defaults to `dim L`
    pub q_max: Option<usize>,
    /// bound on the tuple length; defaults to the nilpotency index of `N`
    pub r_max: Option<usize>,
    pub seed: u64,
    /// seeded random test vectors per section
    pub random_vectors: usize,
}

impl Default for ExponentConfig {
    fn default() -> Self {
        ExponentConfig {
            q_max: None,
            r_max: None,
            seed: 0,
            random_vectors: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExponentError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("irreducibility of the section of dimensions {upper}/{lower} is undecided")]
    Undecided { upper: usize, lower: usize },
}

impl ExponentError {
    /// Short machine-readable reason.
    pub fn code(&self) -> &'static str {
        match self {
            ExponentError::Structure(StructureError::LeviRequired) => "levi_required",
            ExponentError::Structure(StructureError::NilradicalRequired) => "nilradical_required",
            ExponentError::Structure(_) => "structure",
            ExponentError::Symmetry(_) => "symmetry",
            ExponentError::Undecided { .. } => "undecided_irreducibility",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Certified,
    /// an invariant subspace strictly between the two ends, as a subspace of `L`
    Reducible(Subspace),
    Undecided,
}

/// Matrices of `ops` on `I/J` in the basis given by `comp` modulo `J`.
fn quotient_ops(i: &Subspace, j: &Subspace, comp: &[Vector], ops: &[Matrix]) -> Vec<Matrix> {
    let f = i.field();
    let d = i.ambient();
    let k = comp.len();
    let mut full: Vec<Vector> = j.basis().to_vec();
    full.extend(comp.iter().cloned());
    let m = Matrix::from_cols(f, d, &full);
    let t = j.dim();
    ops.iter()
        .map(|x| {
            let cols: Vec<Vector> = comp
                .iter()
                .map(|c| {
                    let y = m.solve(&x.mul_vec(c)).expect("operator preserves I");
                    y[t..].to_vec()
                })
                .collect();
            Matrix::from_cols(f, k, &cols)
        })
        .collect()
}

fn flatten(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row_slice(r).to_vec()).collect()
}

/// Basis of the associative algebra generated by `gens` (with the identity).
fn enveloping_algebra(gens: &[Matrix], k: usize) -> Vec<Matrix> {
    let f = gens[0].field().clone();
    let id = Matrix::identity(&f, k);
    let mut span = Subspace::span(&f, k * k, &[flatten(&id)]);
    let mut basis = vec![id];
    let mut next = 0;
    while next < basis.len() && span.dim() < k * k {
        let a = basis[next].clone();
        next += 1;
        for g in gens {
            let p = g.mul(&a);
            let v = flatten(&p);
            if !span.contains_vec(&v) {
                span = span.sum(&Subspace::span(&f, k * k, &[v])).expect("same ambient");
                basis.push(p);
            }
        }
    }
    basis
}

fn test_vectors(f: &crate::scalar::Field, k: usize, cfg: &ExponentConfig) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..k).map(|a| linalg::unit_vector(f, k, a)).collect();
    for a in 0..k {
        for b in a + 1..k {
            let mut v = linalg::unit_vector(f, k, a);
            v[b] = f.one();
            out.push(v);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_vectors {
        let v: Vector = (0..k).map(|_| f.from_int((rng.next_u32() % 7) as i64 - 3)).collect();
        if !linalg::is_zero_vec(&v) {
            out.push(v);
        }
    }
    out
}

/// Spins test vectors of `I/J` under `ad(L)` and `ρ(G)`; falls back on the
/// dimension of the enveloping algebra and on kernels of its elements.
pub fn irreducible_check(
    l: &LieAlgebra,
    group: &FiniteGroup,
    rho: &GroupAction,
    i: &Subspace,
    j: &Subspace,
    cfg: &ExponentConfig,
) -> Irreducibility {
    let f = l.field();
    let k = i.dim() - j.dim();
    if k <= 1 {
        return Irreducibility::Certified;
    }
    let comp = j.extend_to(i).expect("same ambient");
    let mut ops: Vec<Matrix> = l.ad_matrices().to_vec();
    ops.extend(rho.matrices.iter().cloned());
    let qops = quotient_ops(i, j, &comp, &ops);
    let lift = |u: &Subspace| -> Subspace {
        let vs: Vec<Vector> = u.basis().iter().map(|c| linalg::combine(f, l.dim(), c, &comp)).collect();
        j.sum(&Subspace::span(f, l.dim(), &vs)).expect("same ambient")
    };
    let try_vec = |v: &Vector| -> Option<Subspace> {
        let u = LieAlgebra::spin(&Subspace::span(f, k, core::slice::from_ref(v)), &qops);
        (!u.is_full() && !u.is_zero()).then(|| lift(&u))
    };
    for v in test_vectors(f, k, cfg) {
        if let Some(u) = try_vec(&v) {
            return Irreducibility::Reducible(u);
        }
    }
    let alg = enveloping_algebra(&qops, k);
    if alg.len() == k * k {
        return Irreducibility::Certified;
    }
    let mut singular: Vec<Matrix> = alg;
    let grho = &qops[l.dim()..];
    for (g, m) in grho.iter().enumerate() {
        let e = group.element_order(g) as u32;
        if e > 1 && f.contains_roots_of_order(e) {
            for t in 0..e as i64 {
                let z = f.root_of_unity_of_order(e, t).expect("checked");
                singular.push(m.sub(&Matrix::identity(f, k).scale(&z)));
            }
        }
    }
    for a in &singular {
        for v in a.kernel() {
            if let Some(u) = try_vec(&v) {
                return Irreducibility::Reducible(u);
            }
        }
    }
    Irreducibility::Undecided
}

/// `L = C_0 ⊋ C_1 ⊋ ... ⊋ C_t = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionChain {
    pub terms: Vec<Subspace>,
}

impl CompositionChain {
    /// `(C_{k-1}, C_k)` for `k = 1..t`.
    pub fn sections(&self) -> Vec<(Subspace, Subspace)> {
        self.terms.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

/// Refines `L ⊇ N ⊇ 0` until every section is certified irreducible.
pub fn composition_chain(
    l: &LieAlgebra,
    group: &FiniteGroup,
    rho: &GroupAction,
    nilradical: &Subspace,
    cfg: &ExponentConfig,
) -> Result<CompositionChain, ExponentError> {
    let mut terms = vec![l.whole()];
    for s in [nilradical.clone(), l.zero_subspace()] {
        if *terms.last().unwrap() != s {
            terms.push(s);
        }
    }
    let mut idx = 0;
    while idx + 1 < terms.len() {
        match irreducible_check(l, group, rho, &terms[idx], &terms[idx + 1], cfg) {
            Irreducibility::Certified => idx += 1,
            Irreducibility::Reducible(u) => terms.insert(idx + 1, u),
            Irreducibility::Undecided => {
                return Err(ExponentError::Undecided {
                    upper: terms[idx].dim(),
                    lower: terms[idx + 1].dim(),
                })
            }
        }
    }
    Ok(CompositionChain { terms })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition2 {
    Satisfied(Vec<usize>),
    Violated,
}

/// `[U, L, ..., L]` for `q = 0..=q_max`.
fn iterated(l: &LieAlgebra, t: &Subspace, q_max: usize) -> Vec<Subspace> {
    let mut out = vec![t.clone()];
    for _ in 0..q_max {
        let next = l.bracket_subspaces(out.last().unwrap(), &l.whole());
        out.push(next);
    }
    out
}

fn nested_nonzero(l: &LieAlgebra, parts: &[&Subspace]) -> bool {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        if acc.is_zero() {
            return false;
        }
        acc = l.bracket_subspaces(&acc, p);
    }
    !acc.is_zero()
}

fn search_q(l: &LieAlgebra, its: &[&Vec<Subspace>], q_max: usize) -> Condition2 {
    let r = its.len();
    let mut q = vec![0usize; r];
    loop {
        let parts: Vec<&Subspace> = q.iter().zip(its).map(|(&x, s)| &s[x]).collect();
        if nested_nonzero(l, &parts) {
            return Condition2::Satisfied(q);
        }
        let mut pos = r;
        loop {
            if pos == 0 {
                return Condition2::Violated;
            }
            pos -= 1;
            if q[pos] < q_max {
                q[pos] += 1;
                for x in &mut q[pos + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Searches `q`-vectors in lexicographic order for a nonzero
/// `[[T_1, L, ..., L], ..., [T_r, L, ..., L]]`.
pub fn condition2(l: &LieAlgebra, complements: &[Subspace], q_max: usize) -> Condition2 {
    if complements.is_empty() {
        return Condition2::Violated;
    }
    let its: Vec<Vec<Subspace>> = complements.iter().map(|t| iterated(l, t, q_max)).collect();
    let refs: Vec<&Vec<Subspace>> = its.iter().collect();
    search_q(l, &refs, q_max)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionInfo {
    pub upper_dim: usize,
    pub lower_dim: usize,
    /// `dim L/Ann(I/J)`
    pub ann_codim: usize,
    pub complement_multiplicity: usize,
    pub ann_decomposition: bool,
    pub projection_checks: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub sections: Vec<usize>,
    pub q: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCheck {
    pub name: String,
    pub expected: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport {
    pub d: usize,
    pub witness: Option<Witness>,
    pub tuples_examined: usize,
    pub nilpotency_index: usize,
    pub r_max: usize,
    pub q_max: usize,
    pub chain_dims: Vec<usize>,
    pub sections: Vec<SectionInfo>,
    pub closed_form_checks: Vec<ClosedFormCheck>,
    pub warnings: Vec<String>,
}

/// The group and action matrices of a datum; a grading is replaced by the
/// dual action of its character group.
pub fn acting_group(l: &LieAlgebra, datum: &SymmetryDatum) -> Result<(FiniteGroup, GroupAction), SymmetryError> {
    match &datum.kind {
        SymmetryKind::None => Ok((
            datum.group.clone(),
            GroupAction {
                matrices: datum.action_matrices(l).expect("identity action"),
            },
        )),
        SymmetryKind::Action(rho) => Ok((datum.group.clone(), rho.clone())),
        SymmetryKind::Grading(gr) => {
            let (chars, rho) = symmetry::grading_to_action(l, &datum.group, gr)?;
            Ok((chars.as_group(), rho))
        }
    }
}

/// Everything `compute_d` derives before the tuple search.
#[derive(Clone, Debug)]
pub struct Setup {
    pub group: FiniteGroup,
    pub rho: GroupAction,
    pub structure: Structure,
    pub chain: CompositionChain,
    pub complements: Vec<structure::Complement>,
}

pub fn setup(
    l: &LieAlgebra,
    datum: &SymmetryDatum,
    ann: &Annotations,
    cfg: &ExponentConfig,
) -> Result<Setup, ExponentError> {
    let (group, rho) = acting_group(l, datum)?;
    let st = structure::analyze(l, &group, &rho, ann)?;
    let chain = composition_chain(l, &group, &rho, &st.nilradical, cfg)?;
    let complements = chain
        .sections()
        .iter()
        .map(|(i, j)| structure::complement(l, i, j, &st.levi, &group, &rho))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Setup {
        group,
        rho,
        structure: st,
        chain,
        complements,
    })
}

pub fn compute_d(
    l: &LieAlgebra,
    datum: &SymmetryDatum,
    ann: &Annotations,
    cfg: &ExponentConfig,
) -> Result<ExponentReport, ExponentError> {
    let s = setup(l, datum, ann, cfg)?;
    let dim = l.dim();
    let p = s.structure.nilpotency_index;
    let r_max = cfg.r_max.unwrap_or(p);
    let q_max = cfg.q_max.unwrap_or(dim);
    let sections = s.chain.sections();
    let anns: Vec<Subspace> = sections.iter().map(|(i, j)| l.annihilator_unchecked(i, j)).collect();
    let mut infos = Vec::new();
    let mut warnings = Vec::new();
    for (k, ((i, j), c)) in sections.iter().zip(&s.complements).enumerate() {
        let dec = structure::ann_decomposition_check(l, &s.structure, i, j);
        if c.multiplicity > 1 {
            warnings.push(alloc::format!(
                "section {} has complement multiplicity {}; condition 2 was tested on one complement",
                k, c.multiplicity
            ));
        }
        infos.push(SectionInfo {
            upper_dim: i.dim(),
            lower_dim: j.dim(),
            ann_codim: dim - anns[k].dim(),
            complement_multiplicity: c.multiplicity,
            ann_decomposition: dec.holds,
            projection_checks: c.g_equivariant && c.b_equivariant && c.kernel_complement,
        });
    }
    let its: Vec<Vec<Subspace>> = s.complements.iter().map(|c| iterated(l, &c.complement, q_max)).collect();
    let t = sections.len();
    let mut best: Option<(usize, Witness)> = None;
    let mut examined = 0;
    for r in 1..=r_max {
        if t == 0 {
            break;
        }
        let mut idx = vec![0usize; r];
        loop {
            examined += 1;
            let refs: Vec<&Vec<Subspace>> = idx.iter().map(|&k| &its[k]).collect();
            if let Condition2::Satisfied(q) = search_q(l, &refs, q_max) {
                let mut inter = l.whole();
                for &k in &idx {
                    inter = inter.intersect(&anns[k]).expect("same ambient");
                }
                let value = dim - inter.dim();
                let better = match &best {
                    None => true,
                    Some((v, w)) => value > *v || (value == *v && idx < w.sections),
                };
                if better {
                    best = Some((value, Witness { sections: idx.clone(), q }));
                }
            }
            let mut pos = r;
            let mut done = true;
            while pos > 0 {
                pos -= 1;
                if idx[pos] + 1 < t {
                    idx[pos] += 1;
                    for x in &mut idx[pos + 1..] {
                        *x = 0;
                    }
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    let d = best.as_ref().map_or(0, |b| b.0);
    let closed_form_checks = closed_forms(l, &s, ann, &infos, d);
    Ok(ExponentReport {
        d,
        witness: best.map(|b| b.1),
        tuples_examined: examined,
        nilpotency_index: p,
        r_max,
        q_max,
        chain_dims: s.chain.dims(),
        sections: infos,
        closed_form_checks,
        warnings,
    })
}

fn closed_forms(l: &LieAlgebra, s: &Setup, ann: &Annotations, infos: &[SectionInfo], d: usize) -> Vec<ClosedFormCheck> {
    let mut out = Vec::new();
    if s.structure.radical.is_zero() {
        let (name, expected) = if infos.len() == 1 {
            ("g_simple", l.dim())
        } else {
            ("semisimple", infos.iter().map(|x| x.upper_dim - x.lower_dim).max().unwrap_or(0))
        };
        out.push(ClosedFormCheck {
            name: name.into(),
            expected,
            holds: d == expected,
        });
    }
    if let Some(labels) = &ann.orbit_basis {
        if let Ok(orbits) = symmetry::orbits(&s.group, &s.rho, labels) {
            let expected = orbits.iter().map(Vec::len).max().unwrap_or(0);
            out.push(ClosedFormCheck {
                name: "orbit".into(),
                expected,
                holds: d == expected,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::tests::{heisenberg, metabelian, sl2};
    use crate::scalar::Field;

    fn cyclic(l: &LieAlgebra, m: usize) -> SymmetryDatum {
        let f = l.field();
        let d = 2 * m;
        let mut tau = Matrix::zeros(f, d, d);
        for i in 0..m {
            tau[((i + 1) % m, i)] = f.one();
            tau[(m + (i + 1) % m, m + i)] = f.one();
        }
        let g = FiniteGroup::abelian(&[m as u32], None).unwrap();
        SymmetryDatum::action(
            g,
            GroupAction {
                matrices: (0..m as u32).map(|k| tau.pow(k)).collect(),
            },
        )
    }

    fn metabelian_over(f: &Field, m: usize) -> LieAlgebra {
        let base = metabelian(m);
        let br: Vec<_> = (0..m)
            .map(|i| (i, m + i, linalg::unit_vector(f, 2 * m, m + i)))
            .collect();
        LieAlgebra::from_brackets(f, base.names().to_vec(), &br).unwrap()
    }

    #[test]
    fn adjoint_sl2_is_certified() {
        let l = sl2();
        let g = FiniteGroup::trivial();
        let rho = GroupAction::trivial(l.field(), 3);
        let r = irreducible_check(&l, &g, &rho, &l.whole(), &l.zero_subspace(), &ExponentConfig::default());
        assert_eq!(r, Irreducibility::Certified);
        let comp = vec![];
        assert!(quotient_ops(&l.whole(), &l.whole(), &comp, l.ad_matrices())[0].rows() == 0);
    }

    #[test]
    fn b_plane_is_reducible_without_symmetry() {
        let l = metabelian(2);
        let g = FiniteGroup::trivial();
        let rho = GroupAction::trivial(l.field(), 4);
        let n = Subspace::coordinate(l.field(), 4, &[2, 3]);
        let r = irreducible_check(&l, &g, &rho, &n, &l.zero_subspace(), &ExponentConfig::default());
        assert_eq!(r, Irreducibility::Reducible(Subspace::coordinate(l.field(), 4, &[2])));
    }

    #[test]
    fn condition2_examples() {
        let l = metabelian(2);
        let b1 = Subspace::coordinate(l.field(), 4, &[2]);
        let b2 = Subspace::coordinate(l.field(), 4, &[3]);
        assert_eq!(condition2(&l, core::slice::from_ref(&b1), 4), Condition2::Satisfied(vec![0]));
        assert_eq!(condition2(&l, &[b1.clone(), b2], 4), Condition2::Violated);
        let a1 = Subspace::coordinate(l.field(), 4, &[0]);
        assert_eq!(condition2(&l, &[b1, a1], 4), Condition2::Satisfied(vec![0, 0]));
    }

    #[test]
    fn exponents_of_small_algebras() {
        let cfg = ExponentConfig::default();
        let none = SymmetryDatum::none();
        let ann = Annotations::default();
        let r = compute_d(&sl2(), &none, &ann, &cfg).unwrap();
        assert_eq!(r.d, 3);
        assert_eq!(r.chain_dims, vec![3, 0]);
        assert!(r.closed_form_checks.iter().all(|c| c.holds));
        assert_eq!(compute_d(&heisenberg(), &none, &ann, &cfg).unwrap().d, 0);
        for m in 1..=2 {
            assert_eq!(compute_d(&metabelian(m), &none, &ann, &cfg).unwrap().d, 1);
        }
        let l = metabelian(2);
        let r = compute_d(&l, &cyclic(&l, 2), &ann, &cfg).unwrap();
        assert_eq!(r.d, 2);
        assert_eq!(r.nilpotency_index, 2);
        assert!(r.sections.iter().all(|s| s.ann_decomposition && s.projection_checks));
    }

    #[test]
    fn three_cycle_needs_cube_roots() {
        let cfg = ExponentConfig::default();
        let ann = Annotations::default();
        let l = metabelian(3);
        assert!(matches!(
            compute_d(&l, &cyclic(&l, 3), &ann, &cfg),
            Err(ExponentError::Undecided { .. })
        ));
        let l = metabelian_over(&Field::cyclotomic(3), 3);
        let r = compute_d(&l, &cyclic(&l, 3), &ann, &cfg).unwrap();
        assert_eq!(r.d, 3);
        assert_eq!(r.chain_dims, vec![6, 5, 4, 3, 0]);
    }
}
