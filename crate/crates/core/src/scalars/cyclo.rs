//! Exact arithmetic in cyclotomic fields Q(ζ_m).
//!
//! A number is a rational coefficient vector of length φ(m), read as a
//! polynomial in ζ_m reduced modulo the cyclotomic polynomial Φ_m.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Φ_m together with the reductions of x^k mod Φ_m for 0 ≤ k < m.
#[derive(Debug)]
pub struct CycloRing {
    m: u32,
    phi: Vec<i64>,
    powers: Vec<Vec<i64>>,
}

fn ring_cache() -> &'static Mutex<HashMap<u32, Arc<CycloRing>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloRing>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact division of integer polynomials by a monic divisor.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; r.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = r[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                r[k + i] -= c * d;
            }
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    quot
}

/// The m-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(v) = phi_cache().lock().unwrap().get(&m) {
        return v.clone();
    }
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            poly = div_monic(&poly, &cyclotomic_poly(d));
        }
    }
    phi_cache().lock().unwrap().insert(m, poly.clone());
    poly
}

impl CycloRing {
    /// Shared descriptor for Q(ζ_m).
    pub fn get(m: u32) -> Arc<CycloRing> {
        assert!(m >= 1, "conductor must be positive");
        if let Some(r) = ring_cache().lock().unwrap().get(&m) {
            return r.clone();
        }
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by x and reduce using x^deg = −Σ φ_i x^i
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..deg {
                    cur[i] -= top * phi[i];
                }
            }
        }
        let ring = Arc::new(CycloRing { m, phi, powers });
        ring_cache().lock().unwrap().insert(m, ring.clone());
        ring
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// φ(m), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduction of x^k modulo Φ_m.
    pub fn power(&self, k: i64) -> &[i64] {
        &self.powers[k.rem_euclid(self.m as i64) as usize]
    }
}

/// An element of Q(ζ_m).
#[derive(Clone)]
pub struct Cyclo {
    m: u32,
    coeffs: Vec<BigRational>,
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

impl Cyclo {
    pub fn zero(m: u32) -> Cyclo {
        let deg = CycloRing::get(m).degree();
        Cyclo {
            m,
            coeffs: vec![BigRational::zero(); deg],
        }
    }

    pub fn one(m: u32) -> Cyclo {
        Cyclo::from_int(m, 1)
    }

    pub fn from_int(m: u32, n: i64) -> Cyclo {
        Cyclo::from_rational(m, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(m: u32, r: BigRational) -> Cyclo {
        let mut c = Cyclo::zero(m);
        c.coeffs[0] = r;
        c
    }

    /// ζ_m^k for any integer k.
    pub fn root(m: u32, k: i64) -> Cyclo {
        let mut counts = vec![0i64; m as usize];
        counts[k.rem_euclid(m as i64) as usize] = 1;
        Cyclo::from_exponent_counts(m, &counts)
    }

    /// Σ_k counts[k] ζ_m^k, with `counts` indexed by exponents mod m.
    pub fn from_exponent_counts(m: u32, counts: &[i64]) -> Cyclo {
        let ring = CycloRing::get(m);
        let mut acc = vec![0i64; ring.degree()];
        for (k, &c) in counts.iter().enumerate() {
            if c != 0 {
                for (a, &v) in acc.iter_mut().zip(ring.power(k as i64)) {
                    *a += c * v;
                }
            }
        }
        Cyclo {
            m,
            coeffs: acc
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Rewrite in Q(ζ_{m2}) for a multiple m2 of m.
    pub fn lift_to(&self, m2: u32) -> Cyclo {
        assert!(m2 % self.m == 0, "{} does not divide {}", self.m, m2);
        if m2 == self.m {
            return self.clone();
        }
        let step = (m2 / self.m) as i64;
        let ring = CycloRing::get(m2);
        let mut out = vec![BigRational::zero(); ring.degree()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(ring.power(j as i64 * step)) {
                if v != 0 {
                    *o += c * BigRational::from_integer(BigInt::from(v));
                }
            }
        }
        Cyclo { m: m2, coeffs: out }
    }

    fn aligned(&self, other: &Cyclo) -> (Cyclo, Cyclo) {
        let m = lcm(self.m, other.m);
        (self.lift_to(m), other.lift_to(m))
    }

    pub fn scale(&self, r: &BigRational) -> Cyclo {
        Cyclo {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Image under ζ_m ↦ ζ_m^t.
    pub fn galois(&self, t: i64) -> Result<Cyclo> {
        let m = self.m;
        if (t.rem_euclid(m as i64)).gcd(&(m as i64)) != 1 {
            return Err(Error::NotCoprime { t, m });
        }
        Ok(self.galois_unchecked(t))
    }

    fn galois_unchecked(&self, t: i64) -> Cyclo {
        let ring = CycloRing::get(self.m);
        let mut out = vec![BigRational::zero(); ring.degree()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(ring.power(j as i64 * t)) {
                if v != 0 {
                    *o += c * BigRational::from_integer(BigInt::from(v));
                }
            }
        }
        Cyclo {
            m: self.m,
            coeffs: out,
        }
    }

    /// Complex conjugate, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Cyclo {
        self.galois_unchecked(-1)
    }

    /// Whether the number lies in Q(ζ_{p^i}), where m = p^k. Checked by
    /// invariance under every automorphism ζ ↦ ζ^t with t ≡ 1 mod p^i.
    pub fn in_subfield(&self, i: u32) -> Result<bool> {
        let (p, k) = prime_power_u32(self.m).ok_or(Error::NotPrimePower(self.m))?;
        if p == 1 || i >= k {
            return Ok(true);
        }
        let m = self.m as i64;
        let step = (p as i64).pow(i);
        let mut t = 1 + step;
        while t < m + 1 {
            if t.gcd(&m) == 1 && self.galois_unchecked(t) != *self {
                return Ok(false);
            }
            t += step;
        }
        Ok(true)
    }

    /// Smallest i with the number in Q(ζ_{p^i}); requires a prime-power conductor.
    pub fn minimal_level(&self) -> Result<u32> {
        let (_, k) = prime_power_u32(self.m).ok_or(Error::NotPrimePower(self.m))?;
        for i in 0..k {
            if self.in_subfield(i)? {
                return Ok(i);
            }
        }
        Ok(k)
    }

    /// If the number is a root of unity ζ_m^k, its order.
    pub fn root_order(&self) -> Option<u32> {
        let m = self.m as i64;
        (0..m)
            .find(|&k| Cyclo::root(self.m, k) == *self)
            .map(|k| (m / k.gcd(&m)) as u32)
    }
}

/// Decomposes m = p^k; m = 1 gives (1, 0).
fn prime_power_u32(m: u32) -> Option<(u32, u32)> {
    if m == 1 {
        return Some((1, 0));
    }
    let p = (2..=m).find(|d| m % d == 0)?;
    let mut rest = m;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        if self.m == other.m {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if self.m != rhs.m {
            let (a, b) = self.aligned(rhs);
            return &a + &b;
        }
        Cyclo {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.m != rhs.m {
            let (a, b) = self.aligned(rhs);
            return &a * &b;
        }
        let ring = CycloRing::get(self.m);
        let deg = ring.degree();
        let mut raw = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = raw[..deg].to_vec();
        for (k, c) in raw.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(ring.power(k as i64)) {
                if v != 0 {
                    *o += c * BigRational::from_integer(BigInt::from(v));
                }
            }
        }
        Cyclo {
            m: self.m,
            coeffs: out,
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $f(self, rhs: Cyclo) -> Cyclo {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match j {
                0 => format!("{c}"),
                _ if c.is_one() => format!("z{}^{j}", self.m),
                _ if (-c).is_one() => format!("-z{}^{j}", self.m),
                _ => format!("{c}*z{}^{j}", self.m),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
        write!(f, "{s}")
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.m, self)
    }
}

/// Sum of rationals as a convenience for tests and reports.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(r: &BigRational) -> bool {
    r.is_integer() && !r.is_negative()
}
