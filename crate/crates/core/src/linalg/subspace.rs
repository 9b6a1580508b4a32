use alloc::vec;
use alloc::vec::Vec;

use super::{LinalgError, Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// A subspace of `F^n`, stored by its reduced row echelon basis. Two
/// subspaces are equal exactly when their bases are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let basis = (0..ambient).map(|i| super::unit_vector(field, ambient, i)).collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: &Field, ambient: usize, vectors: &[Vector]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, vectors);
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: &Field, ambient: usize, indices: &[usize]) -> Subspace {
        let vs: Vec<Vector> = indices
            .iter()
            .map(|&i| super::unit_vector(field, ambient, i))
            .collect();
        Subspace::span(field, ambient, &vs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// `v` minus its component along the basis, read off at the pivots.
    /// Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (w, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, wi) in out.iter_mut().zip(w) {
                if !wi.is_zero() {
                    *o -= &(&c * wi);
                }
            }
        }
        out
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vec(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Subspace::span(&self.field, self.ambient, &vs))
    }

    /// Intersection through the kernel of the stacked system
    /// `sum a_i x_i - sum b_j y_j = 0`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(&self.field, self.ambient));
        }
        let k = self.dim();
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| super::vec_neg(v)));
        let m = Matrix::from_cols(&self.field, self.ambient, &cols);
        let vs: Vec<Vector> = m
            .kernel()
            .iter()
            .map(|x| super::combine(&self.field, self.ambient, &x[..k], &self.basis))
            .collect();
        Ok(Subspace::span(&self.field, self.ambient, &vs))
    }

    /// `{x : w · x = 0 for every w}` under the standard bilinear form.
    pub fn orthogonal(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(&self.field, self.ambient);
        }
        let m = Matrix::from_rows(&self.field, self.ambient, &self.basis);
        Subspace::span(&self.field, self.ambient, &m.kernel())
    }

    /// Image under a linear map acting on columns.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Subspace::span(&self.field, map.rows(), &vs)
    }

    /// `{x : map · x ∈ target}`.
    pub fn preimage(map: &Matrix, target: &Subspace) -> Subspace {
        // map x ∈ target  <=>  map x is killed by a basis of target^⊥.
        let perp = target.orthogonal();
        if perp.is_zero() {
            return Subspace::full(map.field(), map.cols());
        }
        let cond = Matrix::from_rows(map.field(), map.rows(), perp.basis()).mul(map);
        Subspace::span(map.field(), map.cols(), &cond.kernel())
    }

    /// Kernel of a linear map, as a subspace of its domain.
    pub fn kernel_of(map: &Matrix) -> Subspace {
        Subspace::span(map.field(), map.cols(), &map.kernel())
    }

    /// Image of a linear map, as a subspace of its codomain.
    pub fn image_of(map: &Matrix) -> Subspace {
        let cols: Vec<Vector> = (0..map.cols()).map(|j| map.column(j)).collect();
        Subspace::span(map.field(), map.rows(), &cols)
    }

    /// Standard basis vectors completing `self` to the whole space.
    pub fn standard_complement(&self) -> Vec<Vector> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&i| !is_pivot[i])
            .map(|i| super::unit_vector(&self.field, self.ambient, i))
            .collect()
    }

    /// Extends the basis of `self` to a basis of `bigger` with vectors taken
    /// greedily from `bigger`'s echelon basis.
    pub fn extend_to(&self, bigger: &Subspace) -> Result<Vec<Vector>, LinalgError> {
        self.check(bigger)?;
        let mut cur = self.clone();
        let mut added = Vec::new();
        for v in &bigger.basis {
            if !cur.contains_vec(v) {
                added.push(v.clone());
                cur = cur.sum(&Subspace::span(&self.field, self.ambient, core::slice::from_ref(v)))?;
            }
        }
        Ok(added)
    }
}
