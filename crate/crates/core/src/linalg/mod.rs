//! Exact linear algebra: dense matrices, echelon-form subspaces, an
//! incremental sparse echelon basis, and modular rank for cross-checks.

mod matrix;
pub mod modular;
pub mod sparse;
mod subspace;

use alloc::vec::Vec;

pub use matrix::{bareiss_rank, Matrix};
pub use subspace::Subspace;

use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
}

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    alloc::vec![field.zero(); n]
}

pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vector {
    a.iter().map(|x| x * c).collect()
}

/// `acc += c * v`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

/// `sum coeffs[i] * vectors[i]`.
pub fn combine(field: &Field, n: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    let mut acc = zero_vector(field, n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut acc, c, v);
    }
    acc
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub fn int_vec(f: &Field, v: &[i64]) -> Vector {
        v.iter().map(|&x| f.from_int(x)).collect()
    }

    pub fn int_matrix(f: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows.iter().map(|r| int_vec(f, r)).collect();
        Matrix::from_rows(f, cols, &rows)
    }

    /// Small-integer matrices with a bias towards zeros so that rank deficiency
    /// actually occurs.
    pub fn random_int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], rows * cols).prop_map(
            move |data| {
                let f = Field::rationals();
                Matrix::from_fn(&f, rows, cols, |i, j| f.from_int(data[i * cols + j]))
            },
        )
    }
}
