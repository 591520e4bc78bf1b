//! Finite fields F_q with q = p^e.
//!
//! Elements are encoded as integers `Σ c_i p^i` where `c_i` are the
//! coefficients of the residue modulo the field's defining polynomial.
//! Small fields (q ≤ 256) carry full addition and multiplication tables.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::cyclo::Cyclo;
use crate::scalars::poly;

/// Raw field element: the integer encoding of a residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn rep(self) -> u32 {
        self.0 as u32
    }
}

const TABLE_LIMIT: u32 = 256;
const MAX_Q: u64 = 1 << 16;

/// Standard (Conway) polynomials for the non-prime fields with q ≤ 64,
/// low degree first.
const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

enum Arith {
    Table { add: Vec<Fe>, mul: Vec<Fe> },
    Prime,
    Poly,
}

struct FieldInner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    arith: Arith,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
    trace: Vec<u32>,
}

/// A finite field F_q; cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits q into (p, e) when q is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let mut e = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p as u32, e))
}

impl Field {
    /// Builds F_{p^e}. Without a modulus the built-in table is used (any prime
    /// field, or q ≤ 64).
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::InvalidInput("field exponent must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= MAX_Q)
            .ok_or_else(|| Error::InvalidInput(format!("q = {p}^{e} exceeds {MAX_Q}")))?;
        let modulus = match modulus {
            Some(m) => normalize_modulus(p, e, m)?,
            None if e == 1 => vec![0, 1],
            None => CONWAY
                .iter()
                .find(|(cp, ce, _)| *cp == p && *ce == e)
                .map(|(_, _, m)| m.to_vec())
                .ok_or(Error::NoBuiltinModulus(q))?,
        };
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p, modulus });
        }
        Ok(FieldInner::finish(Field(Arc::new(FieldInner::build(
            p, e, q as u32, modulus,
        )))))
    }

    /// F_q from q alone, using the built-in modulus.
    pub fn from_order(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        Field::new(p, e, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }
    pub fn e(&self) -> u32 {
        self.0.e
    }
    pub fn q(&self) -> u32 {
        self.0.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn elem(&self, rep: u32) -> Result<Fe> {
        if rep < self.q() {
            Ok(Fe(rep as u16))
        } else {
            Err(Error::InvalidInput(format!(
                "field element {rep} out of range for q = {}",
                self.q()
            )))
        }
    }

    /// Image of an integer under Z → F_p ⊂ F_q.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p() as i64) as u16)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q()).map(|r| Fe(r as u16))
    }

    /// The F_p-basis 1, x, …, x^{e−1} of F_q.
    pub fn prime_basis(&self) -> Vec<Fe> {
        (0..self.e()).map(|i| Fe(self.p().pow(i) as u16)).collect()
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let f = &*self.0;
        if f.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        match &f.arith {
            Arith::Table { add, .. } => add[a.0 as usize * f.q as usize + b.0 as usize],
            Arith::Prime => Fe(((a.0 as u32 + b.0 as u32) % f.p) as u16),
            Arith::Poly => {
                let (x, y) = (self.digits(a), self.digits(b));
                let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % f.p).collect();
                self.undigits(&s)
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.0.neg[a.0 as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let f = &*self.0;
        match &f.arith {
            Arith::Table { mul, .. } => mul[a.0 as usize * f.q as usize + b.0 as usize],
            Arith::Prime => Fe(((a.0 as u32 * b.0 as u32) % f.p) as u16),
            Arith::Poly => self.mul_poly(a, b),
        }
    }

    /// `acc + a·b`
    #[inline]
    pub fn mul_add(&self, acc: Fe, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return acc;
        }
        self.add(acc, self.mul(a, b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        (!a.is_zero()).then(|| self.0.inv[a.0 as usize])
    }

    pub fn pow(&self, a: Fe, mut k: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Absolute trace F_q → F_p, returned as an integer in [0, p).
    #[inline]
    pub fn trace(&self, a: Fe) -> u32 {
        self.0.trace[a.0 as usize]
    }

    /// The additive character θ(x) = ζ_p^{Tr(x)}.
    pub fn theta(&self, a: Fe) -> Cyclo {
        Cyclo::root(self.p(), self.trace(a) as i64)
    }

    pub fn element(&self, a: Fe) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: a,
        }
    }

    fn digits(&self, a: Fe) -> Vec<u32> {
        let mut r = a.0 as u32;
        (0..self.e())
            .map(|_| {
                let d = r % self.p();
                r /= self.p();
                d
            })
            .collect()
    }

    fn undigits(&self, d: &[u32]) -> Fe {
        Fe(d.iter().rev().fold(0u32, |acc, &c| acc * self.p() + c) as u16)
    }

    fn mul_poly(&self, a: Fe, b: Fe) -> Fe {
        let prod = poly::mul(&self.digits(a), &self.digits(b), self.p());
        let mut r = poly::rem(&prod, &self.0.modulus, self.p());
        r.resize(self.e() as usize, 0);
        self.undigits(&r)
    }
}

fn normalize_modulus(p: u32, e: u32, m: &[u32]) -> Result<Vec<u32>> {
    let mut m: Vec<u32> = m.iter().map(|c| c % p).collect();
    while m.last() == Some(&0) {
        m.pop();
    }
    if m.len() != e as usize + 1 {
        return Err(Error::InvalidInput(format!(
            "modulus must have degree {e}, got {:?}",
            m
        )));
    }
    let lead = *m.last().unwrap();
    let inv = poly::inv_mod_p(lead, p);
    Ok(m.into_iter().map(|c| c * inv % p).collect())
}

impl FieldInner {
    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> FieldInner {
        let digits = |a: u32| -> Vec<u32> {
            let mut r = a;
            (0..e)
                .map(|_| {
                    let d = r % p;
                    r /= p;
                    d
                })
                .collect()
        };
        let undigits = |d: &[u32]| Fe(d.iter().rev().fold(0u32, |acc, &c| acc * p + c) as u16);
        let neg = (0..q)
            .map(|a| undigits(&digits(a).iter().map(|c| (p - c) % p).collect::<Vec<_>>()))
            .collect();
        let arith = if q <= TABLE_LIMIT {
            let mut add = Vec::with_capacity((q * q) as usize);
            let mut mul = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    let (x, y) = (digits(a), digits(b));
                    let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                    add.push(undigits(&s));
                    let mut r = poly::rem(&poly::mul(&x, &y, p), &modulus, p);
                    r.resize(e as usize, 0);
                    mul.push(undigits(&r));
                }
            }
            Arith::Table { add, mul }
        } else if e == 1 {
            Arith::Prime
        } else {
            Arith::Poly
        };
        FieldInner {
            p,
            e,
            q,
            modulus,
            arith,
            neg,
            inv: Vec::new(),
            trace: Vec::new(),
        }
    }

    /// Fills the inverse and trace tables, which need working arithmetic.
    fn finish(mut field: Field) -> Field {
        let q = field.q();
        let (p, e) = (field.p(), field.e());
        let inv: Vec<Fe> = field
            .elements()
            .map(|a| if a.is_zero() { a } else { field.pow(a, q as u64 - 2) })
            .collect();
        let trace: Vec<u32> = field
            .elements()
            .map(|a| {
                let mut acc = Fe::ZERO;
                let mut x = a;
                for _ in 0..e {
                    acc = field.add(acc, x);
                    x = field.pow(x, p as u64);
                }
                debug_assert!(acc.rep() < p);
                acc.rep()
            })
            .collect();
        let inner = Arc::get_mut(&mut field.0).expect("fresh field handle is unique");
        inner.inv = inv;
        inner.trace = trace;
        field
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.p() == other.p() && self.e() == other.e() && self.modulus() == other.modulus())
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}(modulus {:?})", self.q(), self.modulus())
    }
}

/// A field element bundled with its field, for operator-style arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    pub field: Field,
    pub value: Fe,
}

impl FieldElement {
    pub fn inv(&self) -> Option<FieldElement> {
        self.field.inv(self.value).map(|v| self.field.element(v))
    }
    pub fn pow(&self, k: u64) -> FieldElement {
        self.field.element(self.field.pow(self.value, k))
    }
    pub fn trace(&self) -> u32 {
        self.field.trace(self.value)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈F_{}", self.value.0, self.field.q())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                assert!(self.field == rhs.field, "field mismatch");
                self.field.element(self.field.$m(self.value, rhs.value))
            }
        }
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.element(self.field.neg(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_default_modulus_is_x() {
        let f = Field::new(2, 1, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.q(), 2);
        assert_eq!(f.add(Fe(1), Fe(1)), Fe(0));
    }

    #[test]
    fn f4_omega_times_omega_plus_one() {
        let f = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        // ω = x ↦ 2, ω + 1 ↦ 3
        assert_eq!(f.mul(Fe(2), Fe(3)), Fe(1));
        assert_eq!(f.mul(Fe(2), Fe(2)), Fe(3));
    }

    #[test]
    fn f9_from_x2_plus_1() {
        let f = Field::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f.q(), 9);
        // x·x = −1 = 2
        assert_eq!(f.mul(Fe(3), Fe(3)), Fe(2));
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            Field::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus { .. })
        ));
        assert!(matches!(
            Field::new(3, 4, None),
            Err(Error::NoBuiltinModulus(81))
        ));
        // a supplied modulus lifts the table restriction
        assert!(Field::new(3, 4, Some(&[2, 0, 0, 1, 1])).is_ok());
    }

    #[test]
    fn builtin_moduli_are_primitive() {
        for &(p, e, _) in CONWAY {
            let f = Field::new(p, e, None).unwrap();
            let x = Fe(p as u16);
            let order = (1..f.q() as u64).find(|&k| f.pow(x, k) == Fe::ONE).unwrap();
            assert_eq!(order, f.q() as u64 - 1, "F_{}", f.q());
        }
    }

    #[test]
    fn trace_lands_in_prime_field() {
        let f = Field::new(2, 2, None).unwrap();
        // Tr(ω) = ω + ω² = 1
        assert_eq!(f.trace(Fe(2)), 1);
        assert_eq!(f.trace(Fe(1)), 0);
        let f = Field::new(3, 2, None).unwrap();
        let total: u32 = f.elements().map(|a| f.trace(a)).sum();
        // each trace value hit q/p times
        assert_eq!(total, 3 * (1 + 2));
    }

    #[test]
    fn large_field_paths_agree_with_axioms() {
        let f = Field::new(257, 1, None).unwrap();
        assert_eq!(f.mul(Fe(256), Fe(256)), Fe(1));
        let g = Field::new(2, 9, Some(&[1, 0, 0, 0, 1, 0, 0, 0, 0, 1])).unwrap();
        let a = Fe(300);
        assert_eq!(g.mul(a, g.inv(a).unwrap()), Fe::ONE);
    }

    #[test]
    fn field_element_ops() {
        let f = Field::from_order(5).unwrap();
        let a = f.element(Fe(3));
        let b = f.element(Fe(4));
        assert_eq!((a.clone() + b.clone()).value, Fe(2));
        assert_eq!((a.clone() * b.clone()).value, Fe(2));
        assert_eq!((-a.clone()).value, Fe(2));
        assert_eq!(a.inv().unwrap().value, Fe(2));
    }
}
