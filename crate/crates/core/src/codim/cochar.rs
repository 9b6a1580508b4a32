//! Cocharacters: the `S_n`-character of the evaluation space and its
//! decomposition into irreducibles.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::characters::{class_size, CharacterCache};
use super::eval::{decode, encode};
use super::partition::{partitions, Partition};
use super::{CodimError, EvaluationSpace, Flavor};
use crate::lie::LieAlgebra;
use crate::linalg::sparse::entry;
use crate::perm::{factorial, Perm};
use crate::scalar::{Rational, Scalar};
use crate::symmetry::SymmetryDatum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocharacterEntry {
    pub partition: Partition,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocharacterReport {
    pub n: usize,
    pub entries: Vec<CocharacterEntry>,
    pub colength: u64,
    pub codimension: u64,
    /// `Σ m(λ) dim M(λ) = c_n`
    pub codim_check: bool,
    /// `m(λ) = 0` whenever `λ` has more than `dim L` rows
    pub row_bound_check: bool,
}

impl EvaluationSpace {
    /// Trace of the slot permutation `σ` on `W`: each fully reduced basis row
    /// contributes its permuted value at its own pivot.
    pub fn trace(&self, sigma: &Perm) -> Scalar {
        let n = self.n;
        let d = self.dim;
        let mut acc = self.basis.field().zero();
        let mut i2 = alloc::vec![0usize; n];
        for (row, &p) in self.basis.rows().iter().zip(self.basis.pivots()) {
            let code = p as u64 / d as u64;
            let k = p as u64 % d as u64;
            let i = decode(code, n, d);
            for s in 0..n {
                i2[s] = i[sigma.apply(s)];
            }
            let col = encode(&i2, d) * d as u64 + k;
            if let Some(x) = entry(row, col as u32) {
                acc += x;
            }
        }
        acc
    }
}

/// Multiplicities `m(λ) = (1/n!) Σ_μ |C_μ| χ_λ(μ) tr(μ)`.
pub fn cocharacter(
    l: &LieAlgebra,
    datum: &SymmetryDatum,
    flavor: Flavor,
    n: usize,
    budget: u128,
) -> Result<CocharacterReport, CodimError> {
    let w = EvaluationSpace::build(l, datum, flavor, n, budget)?;
    let classes = partitions(n);
    let mut traces = Vec::with_capacity(classes.len());
    for mu in &classes {
        let t = w.trace(&Perm::with_cycle_type(mu.parts()));
        let q = t.as_rational().cloned().ok_or_else(|| CodimError::IrrationalTrace(mu.to_string()))?;
        traces.push(q);
    }
    let nf = BigInt::from(factorial(n));
    let mut cache = CharacterCache::new();
    let mut entries = Vec::new();
    let mut colength = 0u64;
    let mut weighted = 0u128;
    let mut row_bound_check = true;
    for lambda in &classes {
        let mut sum = Rational::zero();
        for (mu, t) in classes.iter().zip(&traces) {
            let c = BigInt::from(class_size(mu.parts())) * cache.value(lambda, mu.parts());
            sum += t * Rational::from_integer(c);
        }
        let m = sum / Rational::from_integer(nf.clone());
        if !m.is_integer() || m.is_negative() {
            return Err(CodimError::NonIntegralMultiplicity(lambda.to_string()));
        }
        let m = m.to_integer().to_u64().expect("multiplicity fits in u64");
        colength += m;
        weighted += m as u128 * lambda.hook_dim();
        if m > 0 && lambda.len() > l.dim() {
            row_bound_check = false;
        }
        entries.push(CocharacterEntry {
            partition: lambda.clone(),
            multiplicity: m,
        });
    }
    let c = w.rank() as u64;
    Ok(CocharacterReport {
        n,
        entries,
        colength,
        codimension: c,
        codim_check: weighted == c as u128,
        row_bound_check,
    })
}

/// `Σ_λ m(λ)`.
pub fn colength(l: &LieAlgebra, datum: &SymmetryDatum, flavor: Flavor, n: usize, budget: u128) -> Result<u64, CodimError> {
    Ok(cocharacter(l, datum, flavor, n, budget)?.colength)
}

#[cfg(test)]
mod tests {
    use super::super::DEFAULT_BUDGET;
    use super::*;
    use crate::lie::tests::{metabelian, sl2};
    use crate::scalar::Field;
    use alloc::vec;

    fn mults(r: &CocharacterReport) -> Vec<(Vec<usize>, u64)> {
        r.entries
            .iter()
            .filter(|e| e.multiplicity > 0)
            .map(|e| (e.partition.parts().to_vec(), e.multiplicity))
            .collect()
    }

    #[test]
    fn abelian_vanishes() {
        let l = LieAlgebra::abelian(&Field::rationals(), 3);
        for n in 2..=4 {
            let r = cocharacter(&l, &SymmetryDatum::none(), Flavor::Ordinary, n, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.colength, 0);
            assert!(r.codim_check);
        }
        let r = cocharacter(&l, &SymmetryDatum::none(), Flavor::Ordinary, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.colength, 1);
    }

    #[test]
    fn metabelian_hooks() {
        // c_n = n - 1 spread over the hook (n-1, 1)
        let l = metabelian(1);
        let r = cocharacter(&l, &SymmetryDatum::none(), Flavor::Ordinary, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(mults(&r), vec![(vec![2, 1], 1)]);
        assert!(r.codim_check);
        assert_eq!(r.codimension, 2);
    }

    #[test]
    fn sl2_low_degrees() {
        let l = sl2();
        for n in 1..=4 {
            let r = cocharacter(&l, &SymmetryDatum::none(), Flavor::Ordinary, n, DEFAULT_BUDGET).unwrap();
            assert!(r.codim_check, "n = {}", n);
            assert!(r.row_bound_check);
        }
        let r = cocharacter(&l, &SymmetryDatum::none(), Flavor::Ordinary, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(mults(&r), vec![(vec![2, 1], 1)]);
    }
}
