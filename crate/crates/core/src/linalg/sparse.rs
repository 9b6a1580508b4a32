//! Incremental reduced echelon basis for long sparse vectors.
//!
//! Rows are sorted `(column, value)` lists without explicit zeros. The basis
//! is kept fully reduced: every stored row has a `1` at its pivot and `0` at
//! every other pivot, so reducing a vector is one pass over the pivots it
//! touches.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::modular::ModEchelon;
use crate::scalar::{Field, Scalar};

pub type SparseRow = Vec<(u32, Scalar)>;

/// Looks up the entry of a sorted sparse row.
pub fn entry(row: &[(u32, Scalar)], col: u32) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|i| &row[i].1)
}

/// `a - c * b`, merged.
pub fn sub_scaled(a: &[(u32, Scalar)], c: &Scalar, b: &[(u32, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = -(c * &b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 - &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    rows: Vec<SparseRow>,
    pivots: Vec<u32>,
    pivot_row: BTreeMap<u32, usize>,
}

impl EchelonBasis {
    pub fn new(field: &Field) -> EchelonBasis {
        EchelonBasis {
            field: field.clone(),
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    /// Remainder of `v` after removing its components along the basis.
    pub fn reduce(&self, v: &[(u32, Scalar)]) -> SparseRow {
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row.get(c).map(|&r| (r, x.clone())))
            .collect();
        let mut acc: SparseRow = v.to_vec();
        for (r, c) in hits {
            acc = sub_scaled(&acc, &c, &self.rows[r]);
        }
        acc
    }

    pub fn contains(&self, v: &[(u32, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &[(u32, Scalar)]) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        let new_row: SparseRow = r.into_iter().map(|(c, x)| (c, &x * &inv)).collect();
        for row in self.rows.iter_mut() {
            if let Some(c) = entry(row, pivot).cloned() {
                *row = sub_scaled(row, &c, &new_row);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.pivots.push(pivot);
        self.rows.push(new_row);
        true
    }

    /// Builds the basis of the span of `rows`. A modular elimination picks
    /// out candidate independent rows first; these are inserted exactly and
    /// every other row is then checked for membership exactly, so the result
    /// never depends on the prime.
    pub fn from_rows(field: &Field, rows: &[SparseRow]) -> EchelonBasis {
        let mut basis = EchelonBasis::new(field);
        let mut mod_basis = ModEchelon::for_field(field);
        let mut deferred = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            match mod_basis.as_mut().and_then(|m| m.insert_scalar_row(row)) {
                Some(true) => {
                    let grew = basis.insert(row);
                    debug_assert!(grew, "row independent mod p must be independent");
                }
                Some(false) => deferred.push(i),
                None => {
                    basis.insert(row);
                }
            }
        }
        for i in deferred {
            basis.insert(&rows[i]);
        }
        basis
    }
}
