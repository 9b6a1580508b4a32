//! Arithmetic modulo word-size primes `p ≡ 1 (mod m)`, where `Q(z_m)` maps
//! to `F_p` by sending `z_m` to an element of multiplicative order `m`.
//!
//! Ranks mod `p` never exceed the exact rank, so rows independent mod `p` are
//! independent exactly. Used to pre-select pivots and as a test oracle.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::Matrix;
use crate::scalar::{Field, Scalar};

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `F_p` together with the image of `z_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
    pub zeta: u64,
    pub order: u32,
}

impl PrimeField {
    /// The `index`-th largest prime below `2^62` that is `1 mod m`.
    pub fn new(m: u32, index: usize) -> PrimeField {
        let m64 = m.max(1) as u64;
        let mut candidate = (1u64 << 62) - 1;
        candidate -= (candidate - 1) % m64;
        let mut found = 0;
        let p = loop {
            if is_prime(candidate) {
                if found == index {
                    break candidate;
                }
                found += 1;
            }
            candidate -= m64;
        };
        let factors = prime_factors(m64);
        let mut a = 2;
        let zeta = loop {
            let z = pow_mod(a, (p - 1) / m64, p);
            if factors.iter().all(|&q| pow_mod(z, m64 / q, p) != 1) {
                break z;
            }
            a += 1;
        };
        PrimeField {
            p,
            zeta,
            order: m,
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn reduce_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }

    /// Image of an exact scalar, or `None` if a denominator vanishes mod `p`.
    pub fn map(&self, s: &Scalar) -> Option<u64> {
        let mut acc = 0u64;
        let mut zpow = 1u64;
        for c in s.coeffs() {
            let den = self.reduce_int(c.denom());
            if den == 0 {
                return None;
            }
            let v = mul_mod(self.reduce_int(c.numer()), self.inv(den), self.p);
            acc = (acc + mul_mod(v, zpow, self.p)) % self.p;
            zpow = mul_mod(zpow, self.zeta, self.p);
        }
        Some(acc)
    }
}

type ModRow = Vec<(u32, u64)>;

fn sub_scaled_mod(pf: &PrimeField, a: &[(u32, u64)], c: u64, b: &[(u32, u64)]) -> ModRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = pf.sub(0, pf.mul(c, b[j].1));
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = pf.sub(a[i].1, pf.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced echelon basis over `F_p`, same layout as the exact one.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    pf: PrimeField,
    rows: Vec<ModRow>,
    pivot_row: BTreeMap<u32, usize>,
}

impl ModEchelon {
    pub fn new(pf: PrimeField) -> ModEchelon {
        ModEchelon {
            pf,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
        }
    }

    pub fn for_field(field: &Field) -> Option<ModEchelon> {
        Some(ModEchelon::new(PrimeField::new(field.order(), 0)))
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: &[(u32, u64)]) -> bool {
        let pf = self.pf;
        let hits: Vec<(usize, u64)> = v
            .iter()
            .filter(|e| e.1 != 0)
            .filter_map(|(c, x)| self.pivot_row.get(c).map(|&r| (r, *x)))
            .collect();
        let mut acc: ModRow = v.iter().copied().filter(|e| e.1 != 0).collect();
        for (r, c) in hits {
            acc = sub_scaled_mod(&pf, &acc, c, &self.rows[r]);
        }
        let Some(&(pivot, lead)) = acc.first() else {
            return false;
        };
        let inv = pf.inv(lead);
        let new_row: ModRow = acc.into_iter().map(|(c, x)| (c, pf.mul(x, inv))).collect();
        for row in self.rows.iter_mut() {
            if let Ok(k) = row.binary_search_by_key(&pivot, |e| e.0) {
                let c = row[k].1;
                *row = sub_scaled_mod(&pf, row, c, &new_row);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(new_row);
        true
    }

    /// `None` if the row cannot be mapped to `F_p`.
    pub fn insert_scalar_row(&mut self, v: &[(u32, Scalar)]) -> Option<bool> {
        let mut mapped = Vec::with_capacity(v.len());
        for (c, x) in v {
            mapped.push((*c, self.pf.map(x)?));
        }
        Some(self.insert(&mapped))
    }
}

/// Rank of a dense matrix modulo the `index`-th prime for its field.
pub fn rank_mod_p(m: &Matrix, index: usize) -> Option<usize> {
    let pf = PrimeField::new(m.field().order(), index);
    let mut e = ModEchelon::new(pf);
    for i in 0..m.rows() {
        let mut row = Vec::new();
        for (j, x) in m.row_slice(i).iter().enumerate() {
            row.push((j as u32, pf.map(x)?));
        }
        e.insert(&row);
    }
    Some(e.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::tests::random_int_matrix;
    use proptest::prelude::*;

    #[test]
    fn primes_and_roots() {
        for m in [1u32, 2, 3, 4, 5, 6, 12] {
            let pf = PrimeField::new(m, 0);
            assert!(is_prime(pf.p));
            assert_eq!((pf.p - 1) % m as u64, 0);
            assert_eq!(pow_mod(pf.zeta, m as u64, pf.p), 1);
            let f = Field::cyclotomic(m);
            // Phi_m(zeta) = 0 mod p: the map respects the defining relation.
            let z = f.root_of_unity(1);
            assert_eq!(pf.map(&z), Some(pf.zeta % pf.p));
            assert_eq!(pf.map(&z.pow(m as u64)), Some(1));
        }
        assert_ne!(PrimeField::new(3, 0).p, PrimeField::new(3, 1).p);
    }

    #[test]
    fn map_is_a_ring_homomorphism_on_samples() {
        let f = Field::cyclotomic(5);
        let pf = PrimeField::new(5, 1);
        let a = &f.root_of_unity(2) + &f.from_int(3);
        let b = &f.root_of_unity(4) - &f.from_int(7);
        let ab = &a * &b;
        let inv = a.inv().unwrap();
        assert_eq!(pf.map(&ab), Some(pf.mul(pf.map(&a).unwrap(), pf.map(&b).unwrap())));
        assert_eq!(pf.map(&inv), Some(pf.inv(pf.map(&a).unwrap())));
    }

    proptest! {
        #[test]
        fn modular_rank_agrees_on_small_matrices(m in random_int_matrix(6, 6)) {
            prop_assert_eq!(rank_mod_p(&m, 0), Some(m.rank()));
            prop_assert_eq!(rank_mod_p(&m, 1), Some(m.rank()));
        }
    }
}
