//! Alternating and central associative polynomials evaluated on small
//! representations: Regev's polynomial, the scalar-separating polynomial of a
//! reductive center, and a verification harness.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::lie::LieAlgebra;
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::perm::{all_perms, Perm};
use crate::polys::{AssocPoly, Var, Word};
use crate::scalar::{Field, Rational, Scalar};
use crate::symmetry::{FiniteGroup, GroupAction};

/// Largest module dimension the constructions accept.
pub const MAX_MODULE_DIM: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AltError {
    #[error("Regev's polynomial is only built for q <= 2; q = {0} has ({0}^2)!^2 terms")]
    Unsupported(usize),
    #[error("gamma precondition fails: {0}")]
    Precondition(&'static str),
    #[error("module dimension {0} exceeds {max}; Regev's polynomial would need q = {0}", max = MAX_MODULE_DIM)]
    TooLarge(usize),
    #[error("the field is too small to split the action of the center")]
    FieldTooSmall,
    #[error("a center element does not act semisimply")]
    NotSemisimple,
    #[error("the group does not permute the components transitively")]
    NonTransitive,
    #[error("inconsistent instance: {0}")]
    Inconsistent(String),
}

fn inconsistent(s: &str) -> AltError {
    AltError::Inconsistent(String::from(s))
}

/// A Lie algebra with group action together with a module carrying a
/// compatible action.
#[derive(Clone, Debug)]
pub struct RepresentationInstance {
    pub algebra: LieAlgebra,
    pub group: FiniteGroup,
    /// Action on the algebra, one matrix per group element.
    pub algebra_action: GroupAction,
    /// `φ(a_k)` for the basis of the algebra.
    pub module: Vec<Matrix>,
    /// `ρ(g)` on the module.
    pub module_group: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceCheck {
    pub module_axioms: bool,
    pub group_homomorphism: bool,
    pub equivariant: bool,
    pub faithful: bool,
    /// `None` when neither an invariant subspace nor a full enveloping
    /// algebra was found.
    pub irreducible: Option<bool>,
}

impl InstanceCheck {
    pub fn passed(&self) -> bool {
        self.module_axioms && self.group_homomorphism && self.equivariant
    }
}

impl RepresentationInstance {
    pub fn with_trivial_group(algebra: LieAlgebra, module: Vec<Matrix>) -> RepresentationInstance {
        let k = module.first().map_or(0, |m| m.rows());
        let f = algebra.field().clone();
        RepresentationInstance {
            algebra_action: GroupAction::trivial(&f, algebra.dim()),
            group: FiniteGroup::trivial(),
            module_group: vec![Matrix::identity(&f, k)],
            algebra,
            module,
        }
    }

    /// `gl_q` acting on `F^q`; the basis is `E_11, E_12, ..., E_qq`.
    pub fn matrix_algebra(f: &Field, q: usize) -> RepresentationInstance {
        let unit = |a: usize, b: usize| {
            let mut m = Matrix::zeros(f, q, q);
            m[(a, b)] = f.one();
            m
        };
        let mut names = Vec::new();
        let mut module = Vec::new();
        for a in 0..q {
            for b in 0..q {
                names.push(format!("e{}{}", a + 1, b + 1));
                module.push(unit(a, b));
            }
        }
        let d = q * q;
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let c = module[i].commutator(&module[j]);
                if !c.is_zero() {
                    let v: Vector = (0..d).map(|k| c[(k / q, k % q)].clone()).collect();
                    brackets.push((i, j, v));
                }
            }
        }
        let algebra = LieAlgebra::from_brackets(f, names, &brackets).expect("gl_q");
        RepresentationInstance::with_trivial_group(algebra, module)
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn module_dim(&self) -> usize {
        self.module_group.first().map_or(0, |m| m.rows())
    }

    /// `φ(a)` for a coordinate vector `a`.
    pub fn phi(&self, a: &[Scalar]) -> Matrix {
        let k = self.module_dim();
        let mut out = Matrix::zeros(self.field(), k, k);
        for (c, m) in a.iter().zip(&self.module) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// `ρ(g) m ρ(g)^{-1}`.
    pub fn conjugate(&self, m: &Matrix, g: usize) -> Matrix {
        if g == 0 {
            return m.clone();
        }
        let r = &self.module_group[g];
        let ri = r.inverse().expect("invertible group matrix");
        r.mul(m).mul(&ri)
    }

    pub fn check(&self) -> InstanceCheck {
        let l = &self.algebra;
        let n = l.dim();
        let mut module_axioms = self.module.len() == n;
        if module_axioms {
            'outer: for i in 0..n {
                for j in 0..n {
                    let lhs = self.phi(l.bracket_basis(i, j));
                    if lhs != self.module[i].commutator(&self.module[j]) {
                        module_axioms = false;
                        break 'outer;
                    }
                }
            }
        }
        let order = self.group.order();
        let mut group_homomorphism =
            self.module_group.len() == order && self.module_group[0] == Matrix::identity(self.field(), self.module_dim());
        if group_homomorphism {
            'hom: for g in 0..order {
                for h in 0..order {
                    if self.module_group[g].mul(&self.module_group[h]) != self.module_group[self.group.mul(g, h)] {
                        group_homomorphism = false;
                        break 'hom;
                    }
                }
            }
        }
        let mut equivariant = module_axioms && group_homomorphism && self.algebra_action.matrices.len() == order;
        if equivariant {
            'eq: for g in 0..order {
                for i in 0..n {
                    let image = self.algebra_action.matrices[g].column(i);
                    if self.conjugate(&self.module[i], g) != self.phi(&image) {
                        equivariant = false;
                        break 'eq;
                    }
                }
            }
        }
        let faithful = module_axioms && flat_span(&self.module).dim() == n;
        let irreducible = if module_axioms && group_homomorphism {
            module_irreducible(self)
        } else {
            None
        };
        InstanceCheck {
            module_axioms,
            group_homomorphism,
            equivariant,
            faithful,
            irreducible,
        }
    }
}

fn flatten(m: &Matrix) -> Vector {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        v.extend_from_slice(m.row_slice(i));
    }
    v
}

fn flat_span(ms: &[Matrix]) -> Subspace {
    let f = ms.first().map(|m| m.field().clone()).unwrap_or_else(Field::rationals);
    let amb = ms.first().map_or(0, |m| m.rows() * m.cols());
    let vs: Vec<Vector> = ms.iter().map(flatten).collect();
    Subspace::span(&f, amb, &vs)
}

fn module_irreducible(inst: &RepresentationInstance) -> Option<bool> {
    let k = inst.module_dim();
    if k <= 1 {
        return Some(k == 1);
    }
    let f = inst.field();
    let mut gens: Vec<Matrix> = inst.module.clone();
    gens.extend(inst.module_group.iter().skip(1).cloned());
    // enveloping associative algebra
    let mut basis = vec![Matrix::identity(f, k)];
    let mut span = flat_span(&basis);
    let mut frontier = basis.clone();
    while let Some(a) = frontier.pop() {
        for g in &gens {
            let b = g.mul(&a);
            let fb = flatten(&b);
            if !span.contains_vec(&fb) {
                span = span.sum(&Subspace::span(f, k * k, &[fb])).expect("same ambient");
                basis.push(b.clone());
                frontier.push(b);
            }
        }
    }
    if span.dim() == k * k {
        return Some(true);
    }
    for a in &basis {
        for v in a.kernel().into_iter().chain((0..k).map(|i| linalg::unit_vector(f, k, i))) {
            let s = LieAlgebra::spin(&Subspace::span(f, k, &[v]), &gens);
            if !s.is_zero() && !s.is_full() {
                return Some(false);
            }
        }
    }
    None
}

fn deco(g: usize) -> Option<usize> {
    (g != 0).then_some(g)
}

/// Evaluates an associative G-polynomial; `args[i]` is substituted for
/// `x_{i+1}` and `x^g` becomes `ρ(g) x ρ(g)^{-1}`.
pub fn evaluate(p: &AssocPoly, args: &[Matrix], rho: &[Matrix]) -> Matrix {
    let f = args.first().or(rho.first()).expect("nonempty substitution").field().clone();
    let k = args.first().or(rho.first()).unwrap().rows();
    let inverses: Vec<Matrix> = rho.iter().map(|r| r.inverse().expect("invertible group matrix")).collect();
    let mut cache: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();
    let mut out = Matrix::zeros(&f, k, k);
    for (word, c) in p.terms() {
        let mut acc: Option<Matrix> = None;
        let mut dead = false;
        for v in &word.0 {
            let g = v.deco.unwrap_or(0);
            let m = cache
                .entry((v.index, g))
                .or_insert_with(|| {
                    let a = &args[v.index - 1];
                    if g == 0 {
                        a.clone()
                    } else {
                        rho[g].mul(a).mul(&inverses[g])
                    }
                })
                .clone();
            let next = match acc.take() {
                None => m,
                Some(a) => a.mul(&m),
            };
            if next.is_zero() {
                dead = true;
                break;
            }
            acc = Some(next);
        }
        if dead {
            continue;
        }
        let term = acc.unwrap_or_else(|| Matrix::identity(&f, k));
        out = out.add(&term.scale(&f.from_rational(c.clone())));
    }
    out
}

/// Smallest positive integer `γ` with `α_i + γ β_i ≠ 0` for all `i ≤ k`
/// (`k` is 1-based).
pub fn choose_gamma(alpha: &[Scalar], beta: &[Scalar], k: usize) -> Result<Scalar, AltError> {
    if alpha.len() != beta.len() || k == 0 || k > alpha.len() {
        return Err(AltError::Precondition("k out of range"));
    }
    if alpha[..k - 1].iter().any(|a| a.is_zero()) {
        return Err(AltError::Precondition("alpha_i = 0 for some i < k"));
    }
    if !alpha[k - 1].is_zero() {
        return Err(AltError::Precondition("alpha_k != 0"));
    }
    if beta[k - 1].is_zero() {
        return Err(AltError::Precondition("beta_k = 0"));
    }
    let f = alpha[0].field().clone();
    for g in 1i64.. {
        let gamma = f.from_int(g);
        if (0..k).all(|i| !(&alpha[i] + &(&gamma * &beta[i])).is_zero()) {
            return Ok(gamma);
        }
    }
    unreachable!("at most k - 1 forbidden values")
}

/// Variable indices of the two alternating blocks of Regev's polynomial.
pub fn regev_sets(q: usize) -> [Vec<usize>; 2] {
    let s = q * q;
    [(1..=s).collect(), (s + 1..=2 * s).collect()]
}

/// `Σ sign(στ) x_{σ(1)} y_{τ(1)} x_{σ(2)} x_{σ(3)} x_{σ(4)} y_{τ(2)} ...` with
/// blocks of lengths `1, 3, ..., 2q - 1`; `x_i` is variable `i`, `y_i` is
/// variable `q^2 + i`.
pub fn regev_polynomial(q: usize) -> Result<AssocPoly, AltError> {
    if q == 0 || q > 2 {
        return Err(AltError::Unsupported(q));
    }
    let s = q * q;
    let blocks: Vec<usize> = (0..q).map(|i| 2 * i + 1).collect();
    let perms: Vec<Perm> = all_perms(s).collect();
    let mut p = AssocPoly::zero();
    for sigma in &perms {
        for tau in &perms {
            let mut word = Vec::with_capacity(2 * s);
            let mut pos = 0;
            for &b in &blocks {
                for k in pos..pos + b {
                    word.push(Var::plain(sigma.apply(k) + 1));
                }
                for k in pos..pos + b {
                    word.push(Var::plain(s + tau.apply(k) + 1));
                }
                pos += b;
            }
            let sign = sigma.sign() * tau.sign();
            p.add_term(Rational::from_integer(sign.into()), Word(word));
        }
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityScan {
    pub q: usize,
    pub substitutions: u64,
    pub all_scalar: bool,
    pub nonzero: u64,
    /// First substitution in lexicographic order (matrix unit `E_ab` has
    /// index `a q + b`) with a nonzero value, and that scalar.
    pub first_witness: Option<(Vec<usize>, i64)>,
    pub first_non_scalar: Option<Vec<usize>>,
}

/// Evaluates Regev's polynomial on every tuple of matrix units.
pub fn regev_centrality_scan(q: usize) -> Result<CentralityScan, AltError> {
    let p = regev_polynomial(q)?;
    let s = q * q;
    let nv = 2 * s;
    let terms: Vec<(i64, Vec<usize>)> = p
        .terms()
        .map(|(w, c)| {
            let c: i64 = c.to_integer().try_into().expect("small coefficient");
            (c, w.0.iter().map(|v| v.index - 1).collect())
        })
        .collect();
    let total = (s as u64).pow(nv as u32);
    let mut sub = vec![0usize; nv];
    let mut scan = CentralityScan {
        q,
        substitutions: total,
        all_scalar: true,
        nonzero: 0,
        first_witness: None,
        first_non_scalar: None,
    };
    let mut acc = vec![0i64; s];
    for _ in 0..total {
        acc.iter_mut().for_each(|a| *a = 0);
        for (c, word) in &terms {
            let first = sub[word[0]];
            let mut col = first % q;
            let mut alive = true;
            for &v in &word[1..] {
                let u = sub[v];
                if u / q != col {
                    alive = false;
                    break;
                }
                col = u % q;
            }
            if alive {
                acc[(first / q) * q + col] += c;
            }
        }
        let scalar = (0..q).all(|a| (0..q).all(|b| if a == b { acc[a * q + a] == acc[0] } else { acc[a * q + b] == 0 }));
        if !scalar {
            scan.all_scalar = false;
            scan.first_non_scalar.get_or_insert_with(|| sub.clone());
        } else if acc[0] != 0 {
            scan.nonzero += 1;
            if scan.first_witness.is_none() {
                scan.first_witness = Some((sub.clone(), acc[0]));
            }
        }
        // next tuple, last variable fastest
        for k in (0..nv).rev() {
            sub[k] += 1;
            if sub[k] < s {
                break;
            }
            sub[k] = 0;
        }
    }
    Ok(scan)
}

/// Matrices substituted for the variables, plus the group acting on them.
#[derive(Clone, Debug)]
pub struct SubstitutionSpace {
    pub basis: Vec<Matrix>,
    pub group: Vec<Matrix>,
}

impl SubstitutionSpace {
    pub fn from_instance(inst: &RepresentationInstance) -> SubstitutionSpace {
        SubstitutionSpace {
            basis: inst.module.clone(),
            group: inst.module_group.clone(),
        }
    }

    /// All `q x q` matrix units.
    pub fn matrix_units(f: &Field, q: usize) -> SubstitutionSpace {
        SubstitutionSpace::from_instance(&RepresentationInstance::matrix_algebra(f, q))
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Exhaustive enumeration when `|basis|^n` is at most this.
    pub exhaustive_limit: u64,
    pub samples: u64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            exhaustive_limit: 1 << 20,
            samples: 4096,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternationReport {
    pub alternating: bool,
    /// 1-based variable pair whose transposition does not negate `f`.
    pub failed_transposition: Option<(usize, usize)>,
    pub identity: bool,
    /// Basis index substituted for each variable.
    pub witness: Option<Vec<usize>>,
    pub value: Option<Matrix>,
    pub examined: u64,
    pub exhaustive: bool,
}

/// Formal alternation in each set, then a search for a nonvanishing
/// substitution. Tuples repeating a basis element inside a set are skipped
/// once alternation is established, since their value is zero.
pub fn verify_alternating_nonidentity(
    f: &AssocPoly,
    space: &SubstitutionSpace,
    sets: &[Vec<usize>],
    cfg: &SearchConfig,
) -> Result<AlternationReport, AltError> {
    let mut seen = Vec::new();
    for s in sets {
        for &v in s {
            if v == 0 || seen.contains(&v) {
                return Err(inconsistent("variable sets must be disjoint and 1-based"));
            }
            seen.push(v);
        }
    }
    let n = f.max_index().max(seen.iter().copied().max().unwrap_or(0));
    let neg = f.scale(&-Rational::one());
    let mut failed = None;
    'sets: for s in sets {
        for (a, &x) in s.iter().enumerate() {
            for &y in &s[a + 1..] {
                if f.permute(&Perm::transposition(n, x - 1, y - 1)) != neg {
                    failed = Some((x, y));
                    break 'sets;
                }
            }
        }
    }
    let alternating = failed.is_none();
    let b = space.basis.len();
    let pruned = |sub: &[usize]| {
        alternating
            && sets.iter().any(|s| {
                s.iter()
                    .enumerate()
                    .any(|(i, &x)| s[i + 1..].iter().any(|&y| sub[x - 1] == sub[y - 1]))
            })
    };
    let mut report = AlternationReport {
        alternating,
        failed_transposition: failed,
        identity: true,
        witness: None,
        value: None,
        examined: 0,
        exhaustive: true,
    };
    if b == 0 {
        return Ok(report);
    }
    let try_sub = |sub: &[usize], report: &mut AlternationReport| -> bool {
        if pruned(sub) {
            return false;
        }
        report.examined += 1;
        let args: Vec<Matrix> = sub.iter().map(|&i| space.basis[i].clone()).collect();
        let v = evaluate(f, &args, &space.group);
        if v.is_zero() {
            return false;
        }
        report.identity = false;
        report.witness = Some(sub.to_vec());
        report.value = Some(v);
        true
    };
    let total = (b as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total <= cfg.exhaustive_limit as u128 {
        let mut sub = vec![0usize; n];
        for _ in 0..total {
            if try_sub(&sub, &mut report) {
                break;
            }
            for k in (0..n).rev() {
                sub[k] += 1;
                if sub[k] < b {
                    break;
                }
                sub[k] = 0;
            }
        }
    } else {
        report.exhaustive = false;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.samples {
            let sub: Vec<usize> = (0..n).map(|_| (rng.next_u64() % b as u64) as usize).collect();
            if try_sub(&sub, &mut report) {
                break;
            }
        }
    }
    Ok(report)
}

/// `sqrt(d)` for rational `d` when it lies in the field.
fn field_sqrt(f: &Field, d: &Scalar) -> Option<Scalar> {
    let r = d.as_rational()?.clone();
    if r.is_zero() {
        return Some(f.zero());
    }
    let root = |e: u32, k: i64| f.root_of_unity_of_order(e, k).ok();
    let i = || root(4, 1);
    let sqrt_m3 = || root(3, 1).map(|z| &(&z + &z) + &f.one());
    // (c, sqrt(c) when present)
    let candidates: [(i64, Option<Scalar>); 6] = [
        (1, Some(f.one())),
        (-1, i()),
        (-3, sqrt_m3()),
        (2, root(8, 1).and_then(|z| Some(&z + &root(8, 7)?))),
        (-2, root(8, 1).and_then(|z| Some(&z + &root(8, 3)?))),
        (3, root(12, 1).and_then(|z| Some(&z + &root(12, 11)?))),
    ];
    for (c, s) in candidates {
        let Some(s) = s else { continue };
        let t = &r / Rational::from_integer(c.into());
        if t.is_negative() {
            continue;
        }
        let (num, den) = (t.numer().clone(), t.denom().clone());
        let (a, b) = (num.sqrt(), den.sqrt());
        if &a * &a == num && &b * &b == den {
            let out = &s * &f.from_rational(Rational::new(a, b));
            debug_assert!(&(&out * &out) == d);
            return Some(out);
        }
    }
    None
}

/// Common eigenspaces of commuting semisimple operators on a space of
/// dimension at most 2.
fn common_eigenspaces(f: &Field, k: usize, ops: &[Matrix]) -> Result<Vec<Subspace>, AltError> {
    if k > MAX_MODULE_DIM {
        return Err(AltError::TooLarge(k));
    }
    let is_scalar = |m: &Matrix| *m == Matrix::identity(f, k).scale(&m[(0, 0)]);
    let Some(a) = ops.iter().find(|m| !is_scalar(m)) else {
        return Ok(vec![Subspace::full(f, k)]);
    };
    let tr = a.trace();
    let det = a.det().expect("square");
    let disc = &(&tr * &tr) - &(&f.from_int(4) * &det);
    if disc.is_zero() {
        return Err(AltError::NotSemisimple);
    }
    let s = field_sqrt(f, &disc).ok_or(AltError::FieldTooSmall)?;
    let half = f.from_rational(Rational::new(BigInt::one(), BigInt::from(2)));
    let mut comps = Vec::new();
    for lam in [&(&tr + &s) * &half, &(&tr - &s) * &half] {
        let shifted = a.sub(&Matrix::identity(f, k).scale(&lam));
        let line = Subspace::kernel_of(&shifted);
        if line.dim() != 1 {
            return Err(AltError::NotSemisimple);
        }
        for m in ops {
            if !line.contains_vec(&m.mul_vec(&line.basis()[0])) {
                return Err(inconsistent("center elements do not commute"));
            }
        }
        comps.push(line);
    }
    Ok(comps)
}

/// Scalar by which `x` acts on `m`, if it does.
fn scalar_on(x: &Matrix, m: &Subspace) -> Option<Scalar> {
    let v = &m.basis()[0];
    let p = v.iter().position(|c| !c.is_zero())?;
    let c = x.mul_vec(v)[p].checked_div(&v[p]).ok()?;
    m.basis()
        .iter()
        .all(|w| x.mul_vec(w) == linalg::vec_scale(w, &c))
        .then_some(c)
}

#[derive(Clone, Debug)]
pub struct ScalarSeparating {
    /// Dimension of the center.
    pub t: usize,
    /// Number of components.
    pub q: usize,
    pub components: Vec<Subspace>,
    pub projections: Vec<Matrix>,
    /// `orbit_elements[j][i]` is the least `g` with `ρ(g) M_i = M_j`.
    pub orbit_elements: Vec<Vec<usize>>,
    /// Components whose projections complete the center to a basis.
    pub completion: Vec<usize>,
    pub parts: Vec<AssocPoly>,
    /// `part_scalars[j][i]`: the scalar of `f_j` on `M_i`.
    pub part_scalars: Vec<Vec<Scalar>>,
    /// `γ_j` for each part, `γ_1 = 1`.
    pub gammas: Vec<Scalar>,
    pub polynomial: AssocPoly,
    pub value: Matrix,
    pub determinant: Scalar,
    pub alternating: bool,
    pub commutes: bool,
}

impl ScalarSeparating {
    pub fn nondegenerate(&self) -> bool {
        !self.determinant.is_zero()
    }
}

/// A polynomial alternating in `x_1..x_t` whose value at the center basis is
/// an invertible operator acting by a scalar on every component.
pub fn scalar_separating_polynomial(inst: &RepresentationInstance) -> Result<ScalarSeparating, AltError> {
    let f = inst.field().clone();
    let k = inst.module_dim();
    if k > MAX_MODULE_DIM {
        return Err(AltError::TooLarge(k));
    }
    let center = inst.algebra.center();
    let t = center.dim();
    let rs: Vec<Matrix> = center.basis().iter().map(|r| inst.phi(r)).collect();
    let order = inst.group.order();
    if t == 0 {
        let id = Matrix::identity(&f, k);
        return Ok(ScalarSeparating {
            t,
            q: 0,
            components: Vec::new(),
            projections: Vec::new(),
            orbit_elements: Vec::new(),
            completion: Vec::new(),
            parts: Vec::new(),
            part_scalars: Vec::new(),
            gammas: Vec::new(),
            polynomial: AssocPoly::unit(),
            determinant: id.det().expect("square"),
            value: id,
            alternating: true,
            commutes: true,
        });
    }
    let mut all_ops = Vec::new();
    for r in &rs {
        for g in 0..order {
            all_ops.push(inst.conjugate(r, g));
        }
    }
    let comps = common_eigenspaces(&f, k, &all_ops)?;
    let q = comps.len();
    let mut cols = Vec::new();
    for c in &comps {
        cols.extend(c.basis().iter().cloned());
    }
    let pm = Matrix::from_cols(&f, k, &cols);
    let pinv = pm.inverse().ok_or_else(|| inconsistent("components do not span the module"))?;
    let mut projections = Vec::new();
    let mut start = 0;
    for c in &comps {
        let mut d = Matrix::zeros(&f, k, k);
        for i in start..start + c.dim() {
            d[(i, i)] = f.one();
        }
        start += c.dim();
        projections.push(pm.mul(&d).mul(&pinv));
    }
    // component permutation of each group element
    let mut perm = vec![vec![0usize; q]; order];
    for (g, row) in perm.iter_mut().enumerate() {
        for (i, c) in comps.iter().enumerate() {
            let img = c.image(&inst.module_group[g]);
            row[i] = comps
                .iter()
                .position(|d| *d == img)
                .ok_or_else(|| inconsistent("the group does not permute the components"))?;
        }
    }
    let mut orbit_elements = Vec::new();
    for j in 0..q {
        let mut row = Vec::new();
        for i in 0..q {
            let g = (0..order).find(|&g| perm[g][i] == j).ok_or(AltError::NonTransitive)?;
            row.push(g);
        }
        orbit_elements.push(row);
    }
    // basis completion of φ(r_1..r_t) inside the span of the projections
    let mut chosen = rs.clone();
    let pspan = flat_span(&projections);
    if flat_span(&rs).dim() != t || rs.iter().any(|r| !pspan.contains_vec(&flatten(r))) {
        return Err(inconsistent("the center does not act faithfully by scalars on the components"));
    }
    let mut completion = Vec::new();
    for (i, p) in projections.iter().enumerate() {
        if chosen.len() == q {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(p.clone());
        if flat_span(&trial).dim() == trial.len() {
            chosen = trial;
            completion.push(i);
        }
    }
    let perms: Vec<Perm> = all_perms(q).collect();
    let r_args: Vec<Matrix> = rs.clone();
    let mut parts = Vec::new();
    let mut part_scalars = Vec::new();
    for j in 0..q {
        let gs = &orbit_elements[j];
        let mut fj = AssocPoly::zero();
        for sigma in &perms {
            let sign = Rational::from_integer(sigma.sign().into());
            if t == q {
                let word = (0..q).map(|i| Var::new(sigma.apply(i) + 1, deco(gs[i]))).collect();
                fj.add_term(sign, Word(word));
                continue;
            }
            // projection factors multiply to p_c when they all land on c
            let mut target: Option<usize> = None;
            let mut vanishes = false;
            let mut word = Vec::new();
            for (i, &g) in gs.iter().enumerate() {
                let v = sigma.apply(i);
                if v < t {
                    word.push(Var::new(v + 1, deco(g)));
                } else {
                    let c = perm[g][completion[v - t]];
                    match target {
                        Some(d) if d != c => vanishes = true,
                        _ => target = Some(c),
                    }
                }
            }
            if !vanishes && target == Some(j) {
                fj.add_term(sign, Word(word));
            }
        }
        let value = evaluate(&fj, &r_args, &inst.module_group);
        let scalars: Vec<Scalar> = comps
            .iter()
            .map(|c| scalar_on(&value, c).ok_or_else(|| inconsistent("part is not scalar on a component")))
            .collect::<Result<_, _>>()?;
        if scalars[j].is_zero() {
            return Err(inconsistent("part vanishes on its own component"));
        }
        parts.push(fj);
        part_scalars.push(scalars);
    }
    let mut gammas = vec![f.zero(); q];
    gammas[0] = f.one();
    let mut poly = parts[0].clone();
    let mut alpha = part_scalars[0].clone();
    while let Some(kk) = alpha.iter().position(|a| a.is_zero()) {
        let beta = &part_scalars[kk];
        let gamma = choose_gamma(&alpha, beta, kk + 1)?;
        let g_rat = gamma.as_rational().expect("integer gamma").clone();
        poly = poly.add(&parts[kk].scale(&g_rat));
        for (a, b) in alpha.iter_mut().zip(beta) {
            *a = &*a + &(&gamma * b);
        }
        gammas[kk] = &gammas[kk] + &gamma;
    }
    let value = evaluate(&poly, &r_args, &inst.module_group);
    let determinant = value.det().expect("square");
    let neg = poly.scale(&-Rational::one());
    let alternating = (0..t).all(|a| (a + 1..t).all(|b| poly.permute(&Perm::transposition(t, a, b)) == neg));
    let commutes = all_ops.iter().all(|m| value.commutator(m).is_zero());
    Ok(ScalarSeparating {
        t,
        q,
        components: comps,
        projections,
        orbit_elements,
        completion,
        parts,
        part_scalars,
        gammas,
        polynomial: poly,
        value,
        determinant,
        alternating,
        commutes,
    })
}

/// Operator `φ(a_{i_1}) ... φ(a_{i_m}) ρ(g)` completing `φ(L_0)` to a basis of
/// `End(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionWord {
    pub factors: Vec<usize>,
    pub group_element: usize,
}

#[derive(Clone, Debug)]
pub struct AlternateFirst {
    pub ell: usize,
    pub completion: Vec<CompletionWord>,
    /// Group element `h` of the chosen summand `f_h ρ(h)`.
    pub group_element: usize,
    pub polynomial: AssocPoly,
    /// The two alternating sets `x_1..x_ℓ` and `y_1..y_ℓ`.
    pub sets: [Vec<usize>; 2],
    /// Basis index substituted for each variable.
    pub substitution: Vec<usize>,
    /// Value of the chosen summand at the substitution.
    pub value: Matrix,
    /// Value of the whole expression: a nonzero scalar.
    pub total: Matrix,
}

/// Regev's polynomial with the extra slots filled by products of `φ(L_0)`
/// and `ρ(G)`, group elements moved to the right, and the nonvanishing
/// summand kept.
pub fn alternate_first(inst: &RepresentationInstance) -> Result<AlternateFirst, AltError> {
    let f = inst.field().clone();
    let q = inst.module_dim();
    if q > MAX_MODULE_DIM {
        return Err(AltError::TooLarge(q));
    }
    let ell = inst.algebra.dim();
    let order = inst.group.order();
    let mut ops: Vec<Matrix> = inst.module.clone();
    if flat_span(&ops).dim() != ell {
        return Err(inconsistent("the module is not faithful"));
    }
    let mut completion = Vec::new();
    let mut m = 0;
    while ops.len() < q * q {
        if m > 2 * q * q {
            return Err(inconsistent("phi(L) and G do not generate End(M)"));
        }
        let count = ell.pow(m as u32);
        for code in 0..count {
            let mut factors = vec![0usize; m];
            let mut c = code;
            for slot in factors.iter_mut().rev() {
                *slot = c % ell;
                c /= ell;
            }
            for g in 0..order {
                let mut op = Matrix::identity(&f, q);
                for &i in &factors {
                    op = op.mul(&inst.module[i]);
                }
                op = op.mul(&inst.module_group[g]);
                let mut trial = ops.clone();
                trial.push(op);
                if flat_span(&trial).dim() == trial.len() {
                    ops = trial;
                    completion.push(CompletionWord {
                        factors: factors.clone(),
                        group_element: g,
                    });
                }
                if ops.len() == q * q {
                    break;
                }
            }
            if ops.len() == q * q {
                break;
            }
        }
        m += 1;
    }
    enum Token {
        V(usize),
        G(usize),
    }
    let s = q * q;
    // tokens replacing each Regev variable, and the substitution
    let mut replace: Vec<Vec<Token>> = (0..2 * s).map(|_| Vec::new()).collect();
    let mut substitution: Vec<usize> = (0..ell).chain(0..ell).collect();
    for i in 0..ell {
        replace[i].push(Token::V(i + 1));
        replace[s + i].push(Token::V(ell + i + 1));
    }
    let mut next = 2 * ell + 1;
    for (j, w) in completion.iter().enumerate() {
        for block in [ell + j, s + ell + j] {
            for &a in &w.factors {
                replace[block].push(Token::V(next));
                substitution.push(a);
                next += 1;
            }
            replace[block].push(Token::G(w.group_element));
        }
    }
    let regev = regev_polynomial(q)?;
    let mut summands: BTreeMap<usize, AssocPoly> = BTreeMap::new();
    for (word, c) in regev.terms() {
        let mut h = 0usize;
        let mut out = Vec::new();
        for v in &word.0 {
            for tok in &replace[v.index - 1] {
                match *tok {
                    Token::V(i) => out.push(Var::new(i, deco(h))),
                    Token::G(g) => h = inst.group.mul(h, g),
                }
            }
        }
        summands.entry(h).or_default().add_term(c.clone(), Word(out));
    }
    let args: Vec<Matrix> = substitution.iter().map(|&i| inst.module[i].clone()).collect();
    let mut total = Matrix::zeros(&f, q, q);
    let mut chosen = None;
    for (&h, p) in &summands {
        let v = evaluate(p, &args, &inst.module_group);
        total = total.add(&v.mul(&inst.module_group[h]));
        if chosen.is_none() && !v.is_zero() {
            chosen = Some((h, p.clone(), v));
        }
    }
    let (group_element, polynomial, value) = chosen.ok_or_else(|| inconsistent("every summand vanishes"))?;
    Ok(AlternateFirst {
        ell,
        completion,
        group_element,
        polynomial,
        sets: [(1..=ell).collect(), (ell + 1..=2 * ell).collect()],
        substitution,
        value,
        total,
    })
}

/// Replaces `x_index` by `r` (decorations of `x_index` act on `r`).
pub fn substitute(p: &AssocPoly, index: usize, r: &AssocPoly, group: &FiniteGroup) -> AssocPoly {
    let mut out = AssocPoly::zero();
    for (word, c) in p.terms() {
        let mut acc = AssocPoly::term(c.clone(), Word(Vec::new()));
        for v in &word.0 {
            let factor = if v.index == index {
                let g = v.deco.unwrap_or(0);
                r.map_vars(&|w| Var::new(w.index, deco(group.mul(g, w.deco.unwrap_or(0)))))
            } else {
                AssocPoly::var(*v)
            };
            acc = acc.mul(&factor);
        }
        out = out.add(&acc);
    }
    out
}

/// `Σ_i p(x_1, ..., [u, [v, x_i]], ..., x_ℓ)` for the listed `x_i`.
pub fn trace_factor_step(p: &AssocPoly, xs: &[usize], u: usize, v: usize, group: &FiniteGroup) -> AssocPoly {
    let uu = AssocPoly::var(Var::plain(u));
    let vv = AssocPoly::var(Var::plain(v));
    let mut out = AssocPoly::zero();
    for &x in xs {
        let inner = uu.commutator(&vv.commutator(&AssocPoly::var(Var::plain(x))));
        out = out.add(&substitute(p, x, &inner, group));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFactorCheck {
    pub u: usize,
    pub v: usize,
    pub trace: Scalar,
    pub lhs: Matrix,
    pub rhs: Matrix,
    pub holds: bool,
}

/// Evaluates the literal substitution `Σ_i p(.., [u,[v,x_i]], ..)` at
/// `x_i = φ(a_{subst[i]})`, `u = φ(a_u)`, `v = φ(a_v)` and compares with
/// `tr(ad a_u ad a_v) p(...)`. The `xs` must receive distinct basis elements
/// covering the whole algebra.
pub fn trace_factor_check(
    inst: &RepresentationInstance,
    p: &AssocPoly,
    xs: &[usize],
    subst: &[usize],
    u: usize,
    v: usize,
) -> Result<TraceFactorCheck, AltError> {
    let ell = inst.algebra.dim();
    let mut hit: Vec<usize> = xs.iter().map(|&x| subst[x - 1]).collect();
    hit.sort_unstable();
    hit.dedup();
    if xs.len() != ell || hit.len() != ell {
        return Err(inconsistent("the alternating variables must receive a basis"));
    }
    let n = p.max_index().max(subst.len());
    let lifted = trace_factor_step(p, xs, n + 1, n + 2, &inst.group);
    let mut args: Vec<Matrix> = subst.iter().map(|&i| inst.module[i].clone()).collect();
    while args.len() < n {
        args.push(inst.module[0].clone());
    }
    let base = evaluate(p, &args, &inst.module_group);
    args.push(inst.module[u].clone());
    args.push(inst.module[v].clone());
    let lhs = evaluate(&lifted, &args, &inst.module_group);
    let l = &inst.algebra;
    let trace = l.ad_basis(u).mul(l.ad_basis(v)).trace();
    let rhs = base.scale(&trace);
    Ok(TraceFactorCheck {
        u,
        v,
        holds: lhs == rhs,
        trace,
        lhs,
        rhs,
    })
}
