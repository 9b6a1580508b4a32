//! Codimensions, cocharacters and the symmetric group combinatorics behind them.

pub mod characters;
mod cochar;
pub mod eval;
pub mod lr;
pub mod partition;

pub use cochar::{cocharacter, colength, CocharacterEntry, CocharacterReport};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::lie::LieAlgebra;
use crate::linalg::sparse::{EchelonBasis, SparseRow};
use crate::linalg::Vector;
use crate::perm::{all_perms, factorial};
use crate::polys::LiePoly;
use crate::scalar::nth_root_approx;
use crate::symmetry::SymmetryDatum;
use eval::{monomial_row, Operators};

/// Default cap on `(dim L)^{n+1} · n! · |G|^n`.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    Ordinary,
    Graded,
    GAction,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Ordinary => "ordinary",
            Flavor::Graded => "graded",
            Flavor::GAction => "g_action",
        }
    }

    pub fn from_name(s: &str) -> Option<Flavor> {
        match s {
            "ordinary" => Some(Flavor::Ordinary),
            "graded" => Some(Flavor::Graded),
            "g_action" | "action" => Some(Flavor::GAction),
            _ => None,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodimError {
    #[error("flavor {0} does not match the symmetry datum")]
    FlavorMismatch(Flavor),
    #[error("n = {n} needs about {estimate} scalar multiplications, over the budget {budget}; largest feasible n is {max_feasible}")]
    Budget {
        n: usize,
        estimate: u128,
        budget: u128,
        max_feasible: usize,
    },
    #[error("n must be at least 1")]
    ZeroDegree,
    #[error("polynomial is not multilinear")]
    NotMultilinear,
    #[error("decoration {0} is not a group element for this flavor")]
    Decoration(usize),
    #[error("multiplicity of {0} is not a non-negative integer")]
    NonIntegralMultiplicity(String),
    #[error("trace of class {0} is not rational")]
    IrrationalTrace(String),
}

/// `(dim L)^{n+1} · n! · |G|^n`, saturating.
pub fn cost_estimate(dim: usize, n: usize, group_order: usize) -> u128 {
    let a = (dim as u128).saturating_pow(n as u32 + 1);
    let b = factorial(n.min(34));
    let c = (group_order as u128).saturating_pow(n as u32);
    a.saturating_mul(b).saturating_mul(c)
}

pub fn check_budget(dim: usize, n: usize, group_order: usize, budget: u128) -> Result<(), CodimError> {
    let estimate = cost_estimate(dim, n, group_order);
    if estimate <= budget {
        return Ok(());
    }
    let mut max_feasible = 0;
    while max_feasible < n && cost_estimate(dim, max_feasible + 1, group_order) <= budget {
        max_feasible += 1;
    }
    Err(CodimError::Budget {
        n,
        estimate,
        budget,
        max_feasible,
    })
}

/// Span `W` of the evaluation vectors of all degree-`n` monomials.
#[derive(Clone, Debug)]
pub struct EvaluationSpace {
    pub n: usize,
    pub dim: usize,
    pub basis: EchelonBasis,
}

impl EvaluationSpace {
    /// Uses the monomials with `x_1` in the first position, which span the
    /// same space as the full set.
    pub fn build(
        l: &LieAlgebra,
        datum: &SymmetryDatum,
        flavor: Flavor,
        n: usize,
        budget: u128,
    ) -> Result<EvaluationSpace, CodimError> {
        EvaluationSpace::build_with(l, datum, flavor, n, budget, true)
    }

    /// `first_fixed = false` evaluates every monomial.
    pub fn build_with(
        l: &LieAlgebra,
        datum: &SymmetryDatum,
        flavor: Flavor,
        n: usize,
        budget: u128,
        first_fixed: bool,
    ) -> Result<EvaluationSpace, CodimError> {
        if n == 0 {
            return Err(CodimError::ZeroDegree);
        }
        let ops = Operators::new(l, datum, flavor)?;
        check_budget(l.dim(), n, ops.len(), budget)?;
        let d = l.dim();
        let base = ops.base_tensors(n);
        let mut rows: Vec<SparseRow> = Vec::new();
        for sigma in all_perms(n) {
            if first_fixed && sigma.apply(0) != 0 {
                continue;
            }
            for b in &base {
                if b.is_empty() {
                    continue;
                }
                rows.push(monomial_row(b, &sigma, d));
            }
        }
        Ok(EvaluationSpace {
            n,
            dim: d,
            basis: EchelonBasis::from_rows(l.field(), &rows),
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }
}

/// `c_n` for the given flavor.
pub fn codimension(l: &LieAlgebra, datum: &SymmetryDatum, flavor: Flavor, n: usize, budget: u128) -> Result<usize, CodimError> {
    Ok(EvaluationSpace::build(l, datum, flavor, n, budget)?.rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimPoint {
    pub n: usize,
    pub c_n: u64,
    /// `floor(c_n^{1/n} · root_den)`, display only
    pub root_num: u64,
    pub root_den: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimReport {
    pub flavor: Flavor,
    pub points: Vec<CodimPoint>,
}

impl CodimReport {
    pub fn values(&self) -> Vec<u64> {
        self.points.iter().map(|p| p.c_n).collect()
    }
}

pub fn codim_point(n: usize, c_n: u64) -> CodimPoint {
    let (num, den) = nth_root_approx(&BigInt::from(c_n), n as u32, 6);
    CodimPoint {
        n,
        c_n,
        root_num: num.to_u64().unwrap_or(u64::MAX),
        root_den: den.to_u64().unwrap_or(u64::MAX),
    }
}

/// Codimensions for every `n` in `range`, with display roots.
pub fn codim_report(
    l: &LieAlgebra,
    datum: &SymmetryDatum,
    flavor: Flavor,
    range: core::ops::RangeInclusive<usize>,
    budget: u128,
) -> Result<CodimReport, CodimError> {
    let mut points = Vec::new();
    for n in range {
        let c = codimension(l, datum, flavor, n, budget)?;
        points.push(codim_point(n, c as u64));
    }
    Ok(CodimReport { flavor, points })
}

/// `c_1, ..., c_{n_max}`.
pub fn empirical_exponent(
    l: &LieAlgebra,
    datum: &SymmetryDatum,
    flavor: Flavor,
    n_max: usize,
    budget: u128,
) -> Result<CodimReport, CodimError> {
    codim_report(l, datum, flavor, 1..=n_max, budget)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub holds: bool,
    /// basis indices substituted for `x_1..x_n` and the nonzero value
    pub witness: Option<(Vec<usize>, Vector)>,
}

/// Tests a multilinear polynomial on every basis substitution, in
/// lexicographic order; the first nonzero value is the witness.
pub fn is_identity(l: &LieAlgebra, datum: &SymmetryDatum, flavor: Flavor, p: &LiePoly) -> Result<IdentityVerdict, CodimError> {
    let n = p.multilinear_degree().ok_or(CodimError::NotMultilinear)?;
    if n == 0 {
        return Ok(IdentityVerdict {
            holds: true,
            witness: None,
        });
    }
    let ops = Operators::new(l, datum, flavor)?;
    for (tree, _) in p.terms() {
        for v in crate::polys::Monomial::variables(tree) {
            if let Some(g) = v.deco {
                if g >= ops.len() {
                    return Err(CodimError::Decoration(g));
                }
            }
        }
    }
    let d = l.dim();
    let mut subst = vec![0usize; n];
    loop {
        let v = ops.eval_poly(p, &subst);
        if !crate::linalg::is_zero_vec(&v) {
            return Ok(IdentityVerdict {
                holds: false,
                witness: Some((subst, v)),
            });
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(IdentityVerdict {
                    holds: true,
                    witness: None,
                });
            }
            k -= 1;
            subst[k] += 1;
            if subst[k] < d {
                break;
            }
            subst[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::tests::{gl2, heisenberg, metabelian, sl2};
    use crate::polys::{parse, Mode, Polynomial};
    use crate::scalar::Field;
    use crate::symmetry::{FiniteGroup, GroupAction, Grading};
    use alloc::string::ToString;

    fn ordinary(l: &LieAlgebra, n_max: usize) -> Vec<u64> {
        empirical_exponent(l, &SymmetryDatum::none(), Flavor::Ordinary, n_max, DEFAULT_BUDGET)
            .unwrap()
            .values()
    }

    #[test]
    fn metabelian_codimensions_are_n_minus_one() {
        for m in 1..=2 {
            let v = ordinary(&metabelian(m), 5);
            assert_eq!(&v[1..], &[1, 2, 3, 4]);
        }
    }

    #[test]
    fn small_algebras() {
        assert_eq!(ordinary(&sl2(), 4), vec![1, 1, 2, 6]);
        assert_eq!(ordinary(&heisenberg(), 4), vec![1, 1, 0, 0]);
        let ab = LieAlgebra::abelian(&Field::rationals(), 2);
        assert_eq!(ordinary(&ab, 3), vec![1, 0, 0]);
    }

    #[test]
    fn first_variable_reduction_is_exact() {
        let z2 = FiniteGroup::abelian(&[2], Some(vec!["0".into(), "1".into()])).unwrap();
        let gr = SymmetryDatum::grading(z2, Grading { labels: vec![0, 0, 1, 1] });
        let cases: Vec<(LieAlgebra, SymmetryDatum, Flavor)> = vec![
            (sl2(), SymmetryDatum::none(), Flavor::Ordinary),
            (metabelian(2), SymmetryDatum::none(), Flavor::Ordinary),
            (gl2(), gr, Flavor::Graded),
        ];
        for (l, datum, flavor) in cases {
            for n in 1..=4 {
                let fast = EvaluationSpace::build_with(&l, &datum, flavor, n, DEFAULT_BUDGET, true).unwrap();
                let full = EvaluationSpace::build_with(&l, &datum, flavor, n, DEFAULT_BUDGET, false).unwrap();
                assert_eq!(fast.rank(), full.rank());
                let mut a = fast.basis.rows().to_vec();
                let mut b = full.basis.rows().to_vec();
                a.sort_by_key(|r| r[0].0);
                b.sort_by_key(|r| r[0].0);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn budget_refusal_names_feasible_degree() {
        let err = codimension(&sl2(), &SymmetryDatum::none(), Flavor::Ordinary, 9, 1_000_000).unwrap_err();
        match err {
            CodimError::Budget { max_feasible, .. } => {
                assert!(cost_estimate(3, max_feasible, 1) <= 1_000_000);
                assert!(cost_estimate(3, max_feasible + 1, 1) > 1_000_000);
            }
            e => panic!("unexpected {:?}", e),
        }
    }

    #[test]
    fn flavor_must_match() {
        let z2 = FiniteGroup::abelian(&[2], None).unwrap();
        let f = Field::cyclotomic(2);
        let l = gl2();
        let datum = SymmetryDatum::action(z2, GroupAction::trivial(&f, 4));
        assert_eq!(
            codimension(&l, &datum, Flavor::Graded, 1, DEFAULT_BUDGET),
            Err(CodimError::FlavorMismatch(Flavor::Graded))
        );
    }

    #[test]
    fn identity_witness_is_lexicographically_first() {
        let names = ["e".to_string()];
        let Polynomial::Lie(p) = parse("[x1, x2]", Mode::Lie, &names).unwrap() else {
            unreachable!()
        };
        let v = is_identity(&sl2(), &SymmetryDatum::none(), Flavor::Ordinary, &p).unwrap();
        assert!(!v.holds);
        // [e, h] = -2e
        let (subst, value) = v.witness.unwrap();
        assert_eq!(subst, vec![0, 1]);
        assert_eq!(value[0], sl2().field().from_int(-2));
        let Polynomial::Lie(q) = parse("[x1, x1]", Mode::Lie, &names).unwrap() else {
            unreachable!()
        };
        assert_eq!(is_identity(&sl2(), &SymmetryDatum::none(), Flavor::Ordinary, &q), Err(CodimError::NotMultilinear));
    }
}
