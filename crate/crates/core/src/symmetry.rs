//! Finite groups acting on a Lie algebra by automorphisms, group gradings,
//! and the correspondence between gradings by a finite abelian group and
//! actions of its character group.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::lie::LieAlgebra;
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::scalar::{Field, Rational, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group is not abelian")]
    NonAbelian,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("expected {expected} items, got {got}")]
    Count { expected: usize, got: usize },
    #[error("matrix for element {0} has the wrong shape")]
    Shape(String),
    #[error("element {0} does not permute the designated basis vectors")]
    NotPermutation(String),
    #[error("element {0} acts by a singular matrix")]
    Singular(String),
}

/// A finite group given by its multiplication table; element `0` is the
/// identity. Abelian groups built from cyclic orders keep that presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<usize>,
    inverse: Vec<usize>,
    cyclic_orders: Option<Vec<u32>>,
}

impl FiniteGroup {
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::abelian(&[], None).expect("trivial group")
    }

    /// `Z_{m_1} x ... x Z_{m_k}`. Element index is mixed radix with the last
    /// factor varying fastest.
    pub fn abelian(orders: &[u32], names: Option<Vec<String>>) -> Result<FiniteGroup, SymmetryError> {
        if orders.contains(&0) {
            return Err(SymmetryError::NotAGroup("cyclic order 0".into()));
        }
        let n: usize = orders.iter().map(|&m| m as usize).product();
        let tuple = |mut i: usize| {
            let mut t = vec![0u32; orders.len()];
            for (k, &m) in orders.iter().enumerate().rev() {
                t[k] = (i % m as usize) as u32;
                i /= m as usize;
            }
            t
        };
        let index = |t: &[u32]| t.iter().zip(orders).fold(0usize, |acc, (&a, &m)| acc * m as usize + a as usize);
        let mut table = vec![0; n * n];
        let mut inverse = vec![0; n];
        for a in 0..n {
            let ta = tuple(a);
            for b in 0..n {
                let tb = tuple(b);
                let s: Vec<u32> = ta.iter().zip(&tb).zip(orders).map(|((x, y), m)| (x + y) % m).collect();
                table[a * n + b] = index(&s);
            }
            let ti: Vec<u32> = ta.iter().zip(orders).map(|(x, m)| (m - x) % m).collect();
            inverse[a] = index(&ti);
        }
        let names = match names {
            Some(ns) => {
                if ns.len() != n {
                    return Err(SymmetryError::Count {
                        expected: n,
                        got: ns.len(),
                    });
                }
                ns
            }
            None => (0..n).map(|i| default_name(&tuple(i))).collect(),
        };
        Ok(FiniteGroup {
            names,
            table,
            inverse,
            cyclic_orders: Some(orders.to_vec()),
        })
    }

    /// Group from a multiplication table `table[a][b] = ab`, validated.
    pub fn from_table(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<FiniteGroup, SymmetryError> {
        let n = table.len();
        if names.len() != n {
            return Err(SymmetryError::Count {
                expected: n,
                got: names.len(),
            });
        }
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(SymmetryError::NotAGroup("table is not square over the elements".into()));
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(SymmetryError::NotAGroup("element 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(SymmetryError::NotAGroup(alloc::format!(
                            "associativity fails at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(SymmetryError::NotAGroup(alloc::format!("{} has no inverse", names[a]))),
            }
        }
        Ok(FiniteGroup {
            names,
            table: table.into_iter().flatten().collect(),
            inverse,
            cyclic_orders: None,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn cyclic_orders(&self) -> Option<&[u32]> {
        self.cyclic_orders.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    /// Coordinates of an element in the cyclic presentation.
    pub fn tuple(&self, a: usize) -> Option<Vec<u32>> {
        let orders = self.cyclic_orders.as_ref()?;
        let mut i = a;
        let mut t = vec![0u32; orders.len()];
        for (k, &m) in orders.iter().enumerate().rev() {
            t[k] = (i % m as usize) as u32;
            i /= m as usize;
        }
        Some(t)
    }
}

fn default_name(t: &[u32]) -> String {
    if t.iter().all(|&x| x == 0) {
        return "e".into();
    }
    let mut parts = Vec::new();
    for (k, &x) in t.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let base = if t.len() == 1 { "t".to_string() } else { alloc::format!("t{}", k + 1) };
        parts.push(if x == 1 { base } else { alloc::format!("{}^{}", base, x) });
    }
    parts.join(".")
}

/// Representation of a group on the algebra: one matrix per element,
/// column `j` holding the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub matrices: Vec<Matrix>,
}

/// A grading with homogeneous basis: `labels[i]` is the degree of `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub labels: Vec<usize>,
}

/// First failure found by a symmetry validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryReport {
    Pass,
    IdentityNotTrivial,
    NotHomomorphism { g: usize, h: usize },
    NotEquivariant { g: usize, i: usize, j: usize },
    GradingViolated { i: usize, j: usize },
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        matches!(self, SymmetryReport::Pass)
    }
}

impl GroupAction {
    pub fn trivial(field: &Field, dim: usize) -> GroupAction {
        GroupAction {
            matrices: vec![Matrix::identity(field, dim)],
        }
    }

    /// Replaces the matrices of anti-automorphisms by their negatives, which
    /// turns an action by automorphisms and anti-automorphisms into one by
    /// automorphisms only.
    pub fn from_mixed(mut matrices: Vec<Matrix>, anti: &[bool]) -> GroupAction {
        for (m, &a) in matrices.iter_mut().zip(anti) {
            if a {
                *m = m.neg();
            }
        }
        GroupAction { matrices }
    }
}

/// What the group does to the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetryKind {
    None,
    Action(GroupAction),
    Grading(Grading),
}

/// A finite group together with its action on, or grading of, an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryDatum {
    pub group: FiniteGroup,
    pub kind: SymmetryKind,
}

impl SymmetryDatum {
    pub fn none() -> SymmetryDatum {
        SymmetryDatum {
            group: FiniteGroup::trivial(),
            kind: SymmetryKind::None,
        }
    }

    pub fn action(group: FiniteGroup, rho: GroupAction) -> SymmetryDatum {
        SymmetryDatum {
            group,
            kind: SymmetryKind::Action(rho),
        }
    }

    pub fn grading(group: FiniteGroup, gr: Grading) -> SymmetryDatum {
        SymmetryDatum {
            group,
            kind: SymmetryKind::Grading(gr),
        }
    }

    /// Action matrices, with the identity for the trivial datum.
    pub fn action_matrices(&self, l: &LieAlgebra) -> Option<Vec<Matrix>> {
        match &self.kind {
            SymmetryKind::None => Some(vec![Matrix::identity(l.field(), l.dim()); self.group.order()]),
            SymmetryKind::Action(rho) => Some(rho.matrices.clone()),
            SymmetryKind::Grading(_) => None,
        }
    }

    pub fn validate(&self, l: &LieAlgebra) -> Result<SymmetryReport, SymmetryError> {
        match &self.kind {
            SymmetryKind::None => Ok(SymmetryReport::Pass),
            SymmetryKind::Action(rho) => validate_action(l, &self.group, rho),
            SymmetryKind::Grading(gr) => validate_grading(l, &self.group, gr),
        }
    }
}

/// Checks `ρ(e) = 1`, `ρ(gh) = ρ(g)ρ(h)` and `ρ(g)[a, b] = [ρ(g)a, ρ(g)b]`.
pub fn validate_action(l: &LieAlgebra, g: &FiniteGroup, rho: &GroupAction) -> Result<SymmetryReport, SymmetryError> {
    let n = g.order();
    if rho.matrices.len() != n {
        return Err(SymmetryError::Count {
            expected: n,
            got: rho.matrices.len(),
        });
    }
    for (k, m) in rho.matrices.iter().enumerate() {
        if m.rows() != l.dim() || m.cols() != l.dim() {
            return Err(SymmetryError::Shape(g.names()[k].clone()));
        }
    }
    if rho.matrices[0] != Matrix::identity(l.field(), l.dim()) {
        return Ok(SymmetryReport::IdentityNotTrivial);
    }
    for a in 0..n {
        for b in 0..n {
            if rho.matrices[a].mul(&rho.matrices[b]) != rho.matrices[g.mul(a, b)] {
                return Ok(SymmetryReport::NotHomomorphism { g: a, h: b });
            }
        }
    }
    for (k, m) in rho.matrices.iter().enumerate() {
        for i in 0..l.dim() {
            for j in i + 1..l.dim() {
                let lhs = m.mul_vec(l.bracket_basis(i, j));
                let rhs = l.bracket(&m.column(i), &m.column(j));
                if lhs != rhs {
                    return Ok(SymmetryReport::NotEquivariant { g: k, i, j });
                }
            }
        }
    }
    Ok(SymmetryReport::Pass)
}

impl Grading {
    pub fn trivial(dim: usize) -> Grading {
        Grading { labels: vec![0; dim] }
    }

    /// `L^{(g)}` for every group element.
    pub fn components(&self, field: &Field, group_order: usize) -> Vec<Subspace> {
        (0..group_order)
            .map(|g| {
                let idx: Vec<usize> = (0..self.labels.len()).filter(|&i| self.labels[i] == g).collect();
                Subspace::coordinate(field, self.labels.len(), &idx)
            })
            .collect()
    }

    /// Projection onto `L^{(g)}` along the other components.
    pub fn projection(&self, field: &Field, g: usize) -> Matrix {
        let d = self.labels.len();
        let mut m = Matrix::zeros(field, d, d);
        for i in 0..d {
            if self.labels[i] == g {
                m[(i, i)] = field.one();
            }
        }
        m
    }
}

/// Checks `[L^{(g)}, L^{(h)}] ⊆ L^{(gh)}` on basis pairs.
pub fn validate_grading(l: &LieAlgebra, g: &FiniteGroup, gr: &Grading) -> Result<SymmetryReport, SymmetryError> {
    if !g.is_abelian() {
        return Err(SymmetryError::NonAbelian);
    }
    if gr.labels.len() != l.dim() {
        return Err(SymmetryError::Count {
            expected: l.dim(),
            got: gr.labels.len(),
        });
    }
    if let Some(&bad) = gr.labels.iter().find(|&&x| x >= g.order()) {
        return Err(SymmetryError::NotAGroup(alloc::format!("label {} is not an element", bad)));
    }
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let target = g.mul(gr.labels[i], gr.labels[j]);
            let v = l.bracket_basis(i, j);
            if v.iter().enumerate().any(|(k, c)| !c.is_zero() && gr.labels[k] != target) {
                return Ok(SymmetryReport::GradingViolated { i, j });
            }
        }
    }
    Ok(SymmetryReport::Pass)
}

/// Characters of `Z_{m_1} x ... x Z_{m_k}`, indexed like the group itself:
/// `ψ_l(g) = Π ζ_{m_i}^{l_i g_i}`.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    group: FiniteGroup,
    field: Field,
}

impl CharacterGroup {
    pub fn new(group: &FiniteGroup, field: &Field) -> Result<CharacterGroup, SymmetryError> {
        let orders = group.cyclic_orders().ok_or(SymmetryError::NonAbelian)?;
        for &m in orders {
            if !field.contains_roots_of_order(m) {
                return Err(ScalarError::FieldTooSmall {
                    order: field.order(),
                    required: m,
                }
                .into());
            }
        }
        Ok(CharacterGroup {
            group: group.clone(),
            field: field.clone(),
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// `ψ_l(g)`.
    pub fn value(&self, l: usize, g: usize) -> crate::scalar::Scalar {
        let orders = self.group.cyclic_orders().expect("abelian presentation");
        let tl = self.group.tuple(l).unwrap();
        let tg = self.group.tuple(g).unwrap();
        let mut acc = self.field.one();
        for ((&a, &b), &m) in tl.iter().zip(&tg).zip(orders) {
            let k = (a as i64 * b as i64) % m as i64;
            let z = self.field.root_of_unity_of_order(m, k).expect("checked at construction");
            acc = &acc * &z;
        }
        acc
    }

    /// Values of `ψ_l` on the cyclic generators.
    pub fn generator_values(&self, l: usize) -> Vec<crate::scalar::Scalar> {
        let k = self.group.cyclic_orders().map_or(0, |o| o.len());
        (0..k)
            .map(|i| {
                let mut t = vec![0u32; k];
                t[i] = 1;
                let g = t
                    .iter()
                    .zip(self.group.cyclic_orders().unwrap())
                    .fold(0usize, |acc, (&a, &m)| acc * m as usize + a as usize);
                self.value(l, g)
            })
            .collect()
    }

    /// The dual group with the same presentation and names `psi_<g>`.
    pub fn as_group(&self) -> FiniteGroup {
        let names = self
            .group
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| if i == 0 { "e".to_string() } else { alloc::format!("psi_{}", n) })
            .collect();
        FiniteGroup::abelian(self.group.cyclic_orders().unwrap(), Some(names)).unwrap()
    }
}

/// `ψ` acts on `L^{(g)}` by the scalar `ψ(g)`.
pub fn grading_to_action(
    l: &LieAlgebra,
    g: &FiniteGroup,
    gr: &Grading,
) -> Result<(CharacterGroup, GroupAction), SymmetryError> {
    let chars = CharacterGroup::new(g, l.field())?;
    let d = l.dim();
    let matrices = (0..chars.order())
        .map(|psi| {
            let mut m = Matrix::zeros(l.field(), d, d);
            for i in 0..d {
                m[(i, i)] = chars.value(psi, gr.labels[i]);
            }
            m
        })
        .collect();
    Ok((chars, GroupAction { matrices }))
}

/// Grading obtained from an action of an abelian group `A`: the component of
/// the character `χ_g` is the image of `e_g = (1/|A|) Σ_a χ_g(a)^{-1} ρ(a)`.
#[derive(Clone, Debug)]
pub struct ActionGrading {
    pub components: Vec<Subspace>,
    pub idempotents: Vec<Matrix>,
}

impl ActionGrading {
    /// A basis of `L` made of homogeneous vectors, with their labels.
    pub fn homogeneous_basis(&self) -> (Vec<Vector>, Grading) {
        let mut basis = Vec::new();
        let mut labels = Vec::new();
        for (g, c) in self.components.iter().enumerate() {
            for v in c.basis() {
                basis.push(v.clone());
                labels.push(g);
            }
        }
        (basis, Grading { labels })
    }
}

pub fn action_to_grading(l: &LieAlgebra, a: &FiniteGroup, rho: &GroupAction) -> Result<ActionGrading, SymmetryError> {
    let chars = CharacterGroup::new(a, l.field())?;
    let n = a.order();
    let inv_n = l.field().from_rational(Rational::new(1.into(), (n as i64).into()));
    let mut components = Vec::new();
    let mut idempotents = Vec::new();
    for g in 0..n {
        let mut e = Matrix::zeros(l.field(), l.dim(), l.dim());
        for (k, m) in rho.matrices.iter().enumerate() {
            let c = chars.value(g, k).inv()?;
            e = e.add(&m.scale(&c));
        }
        let e = e.scale(&inv_n);
        components.push(Subspace::image_of(&e));
        idempotents.push(e);
    }
    Ok(ActionGrading {
        components,
        idempotents,
    })
}

/// `π̃ = (1/|G|) Σ_g ρ(g) π ρ(g)^{-1}`.
pub fn average_projection(pi: &Matrix, rho: &GroupAction, group: &FiniteGroup) -> Matrix {
    let field = pi.field();
    let n = group.order();
    let mut acc = Matrix::zeros(field, pi.rows(), pi.cols());
    for g in 0..n {
        let term = rho.matrices[g].mul(pi).mul(&rho.matrices[group.inv(g)]);
        acc = acc.add(&term);
    }
    acc.scale(&field.from_rational(Rational::new(1.into(), (n as i64).into())))
}

/// Orbits of the group on the designated basis vectors, which every `ρ(g)`
/// must permute.
pub fn orbits(group: &FiniteGroup, rho: &GroupAction, labels: &[usize]) -> Result<Vec<Vec<usize>>, SymmetryError> {
    let mut images = Vec::new();
    for (k, m) in rho.matrices.iter().enumerate() {
        let mut img = Vec::with_capacity(labels.len());
        for &i in labels {
            let col = m.column(i);
            let hit: Vec<usize> = (0..col.len()).filter(|&r| !col[r].is_zero()).collect();
            match hit.as_slice() {
                [r] if col[*r].is_one() && labels.contains(r) => img.push(*r),
                _ => return Err(SymmetryError::NotPermutation(group.names()[k].clone())),
            }
        }
        images.push(img);
    }
    let mut seen = vec![false; labels.len()];
    let mut out = Vec::new();
    for s in 0..labels.len() {
        if seen[s] {
            continue;
        }
        let mut orbit = vec![labels[s]];
        seen[s] = true;
        let mut k = 0;
        while k < orbit.len() {
            let pos = labels.iter().position(|&x| x == orbit[k]).unwrap();
            for img in &images {
                let t = img[pos];
                let tp = labels.iter().position(|&x| x == t).unwrap();
                if !seen[tp] {
                    seen[tp] = true;
                    orbit.push(t);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    Ok(out)
}

/// Rewrites an algebra in a new basis given by the columns of `p`.
pub fn change_basis(l: &LieAlgebra, new_basis: &[Vector], names: Vec<String>) -> Option<LieAlgebra> {
    let d = l.dim();
    let p = Matrix::from_cols(l.field(), d, new_basis);
    let pinv = p.inverse()?;
    let mut br = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let v = pinv.mul_vec(&l.bracket(&new_basis[i], &new_basis[j]));
            if !linalg::is_zero_vec(&v) {
                br.push((i, j, v));
            }
        }
    }
    LieAlgebra::from_brackets(l.field(), names, &br).ok()
}
