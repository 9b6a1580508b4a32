//! Exact arithmetic in `Q` and in the cyclotomic fields `Q(z)`, `z` a
//! primitive `m`-th root of unity.
//!
//! An element of `Q(z_m)` is stored as its coefficient vector in the power
//! basis `1, z, ..., z^(phi(m)-1)`, i.e. as a residue modulo the cyclotomic
//! polynomial `Phi_m`. Since `Phi_m` is irreducible every nonzero residue has
//! an inverse, found with the extended Euclidean algorithm.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars live in different fields (orders {0} and {1})")]
    FieldMismatch(u32, u32),
    #[error("field Q(z_{order}) does not contain a primitive {required}-th root of unity")]
    FieldTooSmall { order: u32, required: u32 },
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
}

/// Which ground field a document asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn order(self) -> u32 {
        match self {
            FieldSpec::Rationals => 1,
            FieldSpec::Cyclotomic(m) => m,
        }
    }
}

/// Euler's totient.
pub fn totient(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// `Phi_m` as integer coefficients, lowest degree first.
///
/// Computed as `x^m - 1` divided by every `Phi_d` with `d | m`, `d < m`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = div_monic_exact(&num, &phi_d);
        }
    }
    num
}

fn div_monic_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quo = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quo
}

#[derive(Debug)]
struct FieldData {
    spec: FieldSpec,
    order: u32,
    /// Monic `Phi_m`, lowest degree first, length `degree + 1`.
    modulus: Vec<Rational>,
    degree: usize,
}

/// Shared handle to a concrete field `Q(z_m)`.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.order == 1 {
            write!(f, "Q")
        } else {
            write!(f, "Q(z_{})", self.0.order)
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(spec: FieldSpec) -> Field {
        let order = spec.order();
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus: Vec<Rational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let degree = modulus.len() - 1;
        Field(Arc::new(FieldData {
            spec,
            order,
            modulus,
            degree,
        }))
    }

    pub fn rationals() -> Field {
        Field::new(FieldSpec::Rationals)
    }

    pub fn cyclotomic(m: u32) -> Field {
        Field::new(FieldSpec::Cyclotomic(m))
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// `phi(m)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.0.degree],
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, q: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> Result<Scalar, ScalarError> {
        if coeffs.len() != self.0.degree {
            return Err(ScalarError::BadLength {
                expected: self.0.degree,
                got: coeffs.len(),
            });
        }
        Ok(Scalar {
            field: self.clone(),
            coeffs,
        })
    }

    /// Reduces an arbitrary polynomial in `z` (lowest degree first).
    pub fn from_poly(&self, poly: &[Rational]) -> Scalar {
        Scalar {
            field: self.clone(),
            coeffs: self.reduce(poly.to_vec()),
        }
    }

    /// `z_m^k`; `k` is taken modulo `m`.
    pub fn root_of_unity(&self, k: i64) -> Scalar {
        let m = self.0.order as i64;
        let e = k.rem_euclid(m) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        self.from_poly(&poly)
    }

    /// Whether the field contains a primitive `e`-th root of unity.
    pub fn contains_roots_of_order(&self, e: u32) -> bool {
        let m = self.0.order;
        e >= 1 && (m.is_multiple_of(e) || (m % 2 == 1 && (2 * m).is_multiple_of(e)))
    }

    /// `w^k` for the primitive `e`-th root of unity `w = z_m^(m/e)`
    /// (or `-z_m^((m+1)/2)` raised suitably when `m` is odd and `e | 2m`).
    pub fn root_of_unity_of_order(&self, e: u32, k: i64) -> Result<Scalar, ScalarError> {
        let m = self.0.order;
        if !self.contains_roots_of_order(e) {
            return Err(ScalarError::FieldTooSmall {
                order: m,
                required: e,
            });
        }
        if m.is_multiple_of(e) {
            return Ok(self.root_of_unity(k * (m / e) as i64));
        }
        // m odd: -z_m^((m+1)/2) is a primitive 2m-th root of unity.
        let two_m = 2 * m as i64;
        let step = (two_m / e as i64) * k;
        let step = step.rem_euclid(two_m);
        let base = self.root_of_unity((m as i64 + 1) / 2 * step);
        Ok(if step % 2 == 1 { -base } else { base })
    }

    fn reduce(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        let deg = self.0.degree;
        let modulus = &self.0.modulus;
        while poly.len() > deg {
            let top = poly.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = poly.len() - deg;
            for (j, mj) in modulus.iter().take(deg).enumerate() {
                if !mj.is_zero() {
                    poly[shift + j] -= &top * mj;
                }
            }
        }
        poly.resize(deg, Rational::zero());
        poly
    }
}

/// An element of `Q(z_m)`.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    coeffs: Vec<Rational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{}", i)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The four field operations, for callers that dispatch on an operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic: reports field mismatches and division by zero
/// instead of panicking.
pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
    if a.field != b.field {
        return Err(ScalarError::FieldMismatch(a.field.order(), b.field.order()));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        let s = poly_inverse_mod(&self.coeffs, &self.field.0.modulus);
        Ok(self.field.from_poly(&s))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplication by a rational number.
    pub fn scale(&self, q: &Rational) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn check_field(&self, other: &Scalar) {
        assert!(
            self.field == other.field,
            "scalar field mismatch: {:?} vs {:?}",
            self.field,
            other.field
        );
    }
}

// Trimmed polynomial helpers over Q used only for inversion.

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_is_zero(p: &[Rational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() <= db {
        return (vec![Rational::zero()], rem);
    }
    let mut quo = vec![Rational::zero(); rem.len() - db];
    for i in (0..quo.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quo[i] = c;
    }
    rem.truncate(db.max(1));
    trim(&mut rem);
    (quo, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(&mut out);
    out
}

/// `s` with `s * a = 1 mod modulus`, assuming `gcd(a, modulus) = 1`.
fn poly_inverse_mod(a: &[Rational], modulus: &[Rational]) -> Vec<Rational> {
    // Invariant: r_i = s_i * a (mod modulus).
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0 = vec![Rational::zero()];
    let mut s1 = vec![Rational::one()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant since modulus is irreducible.
    debug_assert_eq!(r0.len(), 1);
    let c = r0[0].recip();
    s0.iter().map(|x| x * &c).collect()
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check_field(rhs);
        Scalar {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.check_field(rhs);
        Scalar {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check_field(rhs);
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        let prod = poly_mul(&self.coeffs, &rhs.coeffs);
        Scalar {
            field: self.field.clone(),
            coeffs: self.field.reduce(prod),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for c in &mut self.coeffs {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Floor of `c^(1/n)` scaled by `10^digits`, returned as `(num, den)`.
/// Display-only approximation of an n-th root, computed with integers.
pub fn nth_root_approx(c: &BigInt, n: u32, digits: u32) -> (BigInt, BigInt) {
    let den = num_traits::pow(BigInt::from(10), digits as usize);
    if c.is_zero() || n == 0 {
        return (BigInt::zero(), den);
    }
    let scaled = c * num_traits::pow(den.clone(), n as usize);
    let root = scaled.nth_root(n);
    (root, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        // Phi_12 = x^4 - x^2 + 1
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        for m in 1..=30 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, totient(m));
        }
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = Field::cyclotomic(4);
        let z = f.root_of_unity(1);
        assert_eq!(&z * &z, f.from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        let f = Field::cyclotomic(3);
        let z = f.root_of_unity(1);
        let a = &f.one() + &z;
        let inv = a.inv().unwrap();
        assert_eq!(inv, -z.clone());
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn additive_identity_and_division_by_zero() {
        let f = Field::cyclotomic(5);
        let a = &f.root_of_unity(2) + &f.from_int(7);
        assert_eq!(&a + &f.zero(), a);
        assert_eq!(a.checked_div(&f.zero()), Err(ScalarError::DivisionByZero));
        assert_eq!(
            arith(&a, &f.zero(), ArithOp::Div),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn roots_of_unity_small_cases() {
        assert_eq!(Field::cyclotomic(2).root_of_unity(1), Field::cyclotomic(2).from_int(-1));
        let f3 = Field::cyclotomic(3);
        assert!((&f3.root_of_unity(1) * &f3.root_of_unity(2)).is_one());
        let f6 = Field::cyclotomic(6);
        assert_eq!(f6.root_of_unity(3), f6.from_int(-1));
        assert!(f6.root_of_unity(0).is_one());
    }

    #[test]
    fn roots_of_even_order_in_odd_fields() {
        // -1 is a square root of unity of order 2 inside Q.
        let q = Field::rationals();
        assert_eq!(q.root_of_unity_of_order(2, 1).unwrap(), q.from_int(-1));
        let f3 = Field::cyclotomic(3);
        let w = f3.root_of_unity_of_order(6, 1).unwrap();
        assert!(w.pow(6).is_one());
        assert!(!w.pow(2).is_one() && !w.pow(3).is_one());
        assert!(matches!(
            q.root_of_unity_of_order(3, 1),
            Err(ScalarError::FieldTooSmall { .. })
        ));
    }

    #[test]
    fn display_of_cyclotomic_element() {
        let f = Field::cyclotomic(5);
        let a = &f.from_int(-2) + &f.root_of_unity(3);
        assert_eq!(alloc::format!("{}", a), "-2 + z^3");
        assert_eq!(alloc::format!("{}", f.zero()), "0");
    }

    #[test]
    fn nth_root_display_value() {
        let (num, den) = nth_root_approx(&BigInt::from(8), 3, 3);
        assert_eq!((num, den), (BigInt::from(2000), BigInt::from(1000)));
    }
    #[test]
    fn roots_satisfy_their_cyclotomic_polynomial() {
        for m in 1..=12u32 {
            let f = Field::cyclotomic(m);
            let z = f.root_of_unity(1);
            assert!(z.pow(m as u64).is_one(), "m = {}", m);
            let mut acc = f.zero();
            let mut p = f.one();
            for c in cyclotomic_polynomial(m) {
                acc += &p.scale(&Rational::from_integer(c));
                p *= &z;
            }
            assert!(acc.is_zero(), "m = {}", m);
        }
    }

    fn element(m: u32) -> impl proptest::strategy::Strategy<Value = Scalar> {
        use proptest::prelude::*;
        let f = Field::cyclotomic(m);
        proptest::collection::vec((-20i64..20, 1i64..6), f.degree()).prop_map(move |cs| {
            let coeffs = cs.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect();
            f.from_coeffs(coeffs).unwrap()
        })
    }

    fn any_element() -> impl proptest::strategy::Strategy<Value = (Scalar, Scalar, Scalar)> {
        use proptest::prelude::*;
        (1u32..=12).prop_flat_map(|m| (element(m), element(m), element(m)))
    }

    proptest::proptest! {
        #[test]
        fn field_axioms((a, b, c) in any_element()) {
            proptest::prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            proptest::prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            proptest::prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                proptest::prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn rationals_embed(m in 1u32..=12, a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let f = Field::cyclotomic(m);
            let x = Rational::new(a.into(), b.into());
            let y = Rational::new(c.into(), d.into());
            let (ex, ey) = (f.from_rational(x.clone()), f.from_rational(y.clone()));
            proptest::prop_assert_eq!(&ex + &ey, f.from_rational(&x + &y));
            proptest::prop_assert_eq!(&ex * &ey, f.from_rational(&x * &y));
            proptest::prop_assert_eq!((&ex * &ey).as_rational().cloned(), Some(&x * &y));
        }
    }
}
