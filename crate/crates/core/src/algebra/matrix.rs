//! Pattern algebras 𝔲_{n,P}(q), their nilpotent matrices and the group 1 + 𝔫.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::algebra::pattern::Pattern;
use crate::error::{Error, Result};
use crate::scalars::{Fe, Field};

/// Dense n × n matrix over F_q, used for strictly upper triangular entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NilMatrix {
    n: usize,
    data: Vec<Fe>,
}

impl NilMatrix {
    pub fn zero(n: usize) -> NilMatrix {
        NilMatrix {
            n,
            data: vec![Fe::ZERO; n * n],
        }
    }

    /// c · e_{ij}, 1-based.
    pub fn unit(n: usize, i: usize, j: usize, c: Fe) -> NilMatrix {
        let mut m = NilMatrix::zero(n);
        m.set(i, j, c);
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, c: Fe) {
        self.data[(i - 1) * self.n + (j - 1)] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Nonzero entries as ((i, j), value), row-major.
    pub fn support(&self) -> Vec<((usize, usize), Fe)> {
        let n = self.n;
        (0..n * n)
            .filter(|&k| !self.data[k].is_zero())
            .map(|k| ((k / n + 1, k % n + 1), self.data[k]))
            .collect()
    }
}

impl fmt::Debug for NilMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NilMatrix{:?}", self.support())
    }
}

/// The group element 1 + body.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    body: NilMatrix,
}

impl GroupElement {
    pub fn identity(n: usize) -> GroupElement {
        GroupElement {
            body: NilMatrix::zero(n),
        }
    }

    pub fn from_body(body: NilMatrix) -> GroupElement {
        GroupElement { body }
    }

    pub fn body(&self) -> &NilMatrix {
        &self.body
    }

    pub fn into_body(self) -> NilMatrix {
        self.body
    }

    pub fn is_identity(&self) -> bool {
        self.body.is_zero()
    }
}

struct AlgebraInner {
    pattern: Pattern,
    field: Field,
}

/// The pattern algebra 𝔲_{n,P}(q) for a closed pattern P.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraInner>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.pattern == other.0.pattern && self.0.field == other.0.field)
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(n={}, dim={}, q={})",
            self.n(),
            self.dim(),
            self.field().q()
        )
    }
}

impl Algebra {
    pub fn new(pattern: Pattern, field: Field) -> Result<Algebra> {
        if !pattern.is_closed() {
            return Err(Error::InvalidInput("pattern is not closed".into()));
        }
        Ok(Algebra(Arc::new(AlgebraInner { pattern, field })))
    }

    /// 𝔲_n(q), the full strictly upper triangular algebra.
    pub fn full(n: usize, field: Field) -> Algebra {
        Algebra::new(Pattern::full(n), field).expect("full pattern is closed")
    }

    pub fn n(&self) -> usize {
        self.0.pattern.n()
    }

    pub fn dim(&self) -> usize {
        self.0.pattern.len()
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn pattern(&self) -> &Pattern {
        &self.0.pattern
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        self.0.pattern.positions()
    }

    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        self.0.pattern.index(i, j)
    }

    pub fn index_checked(&self, i: usize, j: usize) -> Result<usize> {
        self.index(i, j)
            .ok_or_else(|| Error::InvalidInput(format!("position ({i},{j}) is not in the pattern")))
    }

    /// Coordinate vector with a single 1 at (i, j).
    pub fn unit_coords(&self, i: usize, j: usize) -> Vec<Fe> {
        let mut v = vec![Fe::ZERO; self.dim()];
        v[self.index(i, j).expect("position in pattern")] = Fe::ONE;
        v
    }

    pub fn from_coords(&self, v: &[Fe]) -> NilMatrix {
        let mut m = NilMatrix::zero(self.n());
        for (&(i, j), &c) in self.positions().iter().zip(v) {
            m.set(i, j, c);
        }
        m
    }

    /// Coordinates over the pattern; entries off the pattern are ignored.
    pub fn coords(&self, m: &NilMatrix) -> Vec<Fe> {
        self.positions().iter().map(|&(i, j)| m.get(i, j)).collect()
    }

    /// Coordinates, rejecting matrices of the wrong size or support.
    pub fn try_coords(&self, m: &NilMatrix) -> Result<Vec<Fe>> {
        self.check(m)?;
        Ok(self.coords(m))
    }

    fn check(&self, m: &NilMatrix) -> Result<()> {
        if m.n() != self.n() {
            return Err(Error::Mismatch(format!(
                "matrix of size {} in an algebra of size {}",
                m.n(),
                self.n()
            )));
        }
        if let Some(((i, j), _)) = m.support().into_iter().find(|((i, j), _)| self.index(*i, *j).is_none()) {
            return Err(Error::Mismatch(format!("entry ({i},{j}) lies outside the pattern")));
        }
        Ok(())
    }

    pub fn add(&self, a: &NilMatrix, b: &NilMatrix) -> NilMatrix {
        let f = self.field();
        NilMatrix {
            n: a.n,
            data: a.data.iter().zip(&b.data).map(|(&x, &y)| f.add(x, y)).collect(),
        }
    }

    pub fn sub(&self, a: &NilMatrix, b: &NilMatrix) -> NilMatrix {
        let f = self.field();
        NilMatrix {
            n: a.n,
            data: a.data.iter().zip(&b.data).map(|(&x, &y)| f.sub(x, y)).collect(),
        }
    }

    pub fn scale(&self, a: &NilMatrix, c: Fe) -> NilMatrix {
        let f = self.field();
        NilMatrix {
            n: a.n,
            data: a.data.iter().map(|&x| f.mul(c, x)).collect(),
        }
    }

    /// Product of two strictly upper triangular matrices.
    pub fn mat_mul(&self, a: &NilMatrix, b: &NilMatrix) -> NilMatrix {
        let f = self.field();
        let n = a.n;
        let mut out = NilMatrix::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let x = a.data[i * n + j];
                if x.is_zero() {
                    continue;
                }
                for k in j + 1..n {
                    let y = b.data[j * n + k];
                    if !y.is_zero() {
                        out.data[i * n + k] = f.mul_add(out.data[i * n + k], x, y);
                    }
                }
            }
        }
        out
    }

    pub fn mat_pow(&self, a: &NilMatrix, k: u32) -> NilMatrix {
        if k == 0 {
            panic!("X^0 is the identity, which is not nilpotent");
        }
        let mut acc = a.clone();
        for _ in 1..k {
            acc = self.mat_mul(&acc, a);
        }
        acc
    }

    pub fn is_nilpotent(&self, a: &NilMatrix) -> bool {
        self.mat_pow(a, self.n().max(1) as u32).is_zero()
    }

    /// (1 + X)(1 + Y) = 1 + X + Y + XY.
    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let xy = self.mat_mul(&g.body, &h.body);
        let s = self.add(&g.body, &h.body);
        GroupElement::from_body(self.add(&s, &xy))
    }

    pub fn try_mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(&g.body)?;
        self.check(&h.body)?;
        Ok(self.mul(g, h))
    }

    /// (1 + X)^{-1} = 1 − X + X² − …
    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        let neg = self.scale(&g.body, self.field().from_int(-1));
        let mut term = neg.clone();
        let mut acc = neg.clone();
        loop {
            term = self.mat_mul(&term, &neg);
            if term.is_zero() {
                break;
            }
            acc = self.add(&acc, &term);
        }
        GroupElement::from_body(acc)
    }

    pub fn conj(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        // g h g^{-1}
        self.mul(&self.mul(g, h), &self.inv(g))
    }

    /// Exp(X) = Σ_{k < p} X^k / k!.
    pub fn trunc_exp(&self, x: &NilMatrix) -> GroupElement {
        let f = self.field();
        let p = f.p() as u64;
        let mut acc = x.clone();
        let mut power = x.clone();
        let mut fact = Fe::ONE;
        let mut k = 2u64;
        while k < p {
            power = self.mat_mul(&power, x);
            if power.is_zero() {
                break;
            }
            fact = f.mul(fact, f.from_int(k as i64));
            let c = f.inv(fact).expect("k! invertible for k < p");
            acc = self.add(&acc, &self.scale(&power, c));
            k += 1;
        }
        GroupElement::from_body(acc)
    }

    /// Inverse of [`Algebra::trunc_exp`] by the fixed point iteration
    /// X ← (g − 1) − (Exp(X) − 1 − X).
    pub fn trunc_log(&self, g: &GroupElement) -> NilMatrix {
        let target = &g.body;
        let mut x = target.clone();
        for _ in 0..=self.n() {
            let e = self.trunc_exp(&x);
            let higher = self.sub(e.body(), &x);
            let next = self.sub(target, &higher);
            if next == x {
                return x;
            }
            x = next;
        }
        debug_assert_eq!(self.trunc_exp(&x).body(), target);
        x
    }

    pub fn random_matrix<R: Rng>(&self, rng: &mut R) -> NilMatrix {
        let q = self.field().q();
        let v: Vec<Fe> = (0..self.dim()).map(|_| Fe(rng.gen_range(0..q) as u16)).collect();
        self.from_coords(&v)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> GroupElement {
        GroupElement::from_body(self.random_matrix(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn u(n: usize, q: u64) -> Algebra {
        Algebra::full(n, Field::from_order(q).unwrap())
    }

    #[test]
    fn product_expands() {
        let a = u(3, 2);
        let g = GroupElement::from_body(NilMatrix::unit(3, 1, 2, Fe::ONE));
        let h = GroupElement::from_body(NilMatrix::unit(3, 2, 3, Fe::ONE));
        let gh = a.mul(&g, &h);
        let mut expect = NilMatrix::zero(3);
        expect.set(1, 2, Fe::ONE);
        expect.set(2, 3, Fe::ONE);
        expect.set(1, 3, Fe::ONE);
        assert_eq!(gh.body(), &expect);
        assert_eq!(a.mul(&g, &GroupElement::identity(3)), g);
        // involution in characteristic two
        assert_eq!(a.inv(&g), g);
    }

    #[test]
    fn inverse_and_mismatch() {
        let a = u(4, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let g = a.random_element(&mut rng);
            assert!(a.mul(&g, &a.inv(&g)).is_identity());
        }
        let wrong = GroupElement::identity(3);
        assert!(a.try_mul(&wrong, &wrong).is_err());
        let sub = Algebra::new(Pattern::new(3, [(1, 2)]).unwrap(), Field::from_order(2).unwrap()).unwrap();
        let off = GroupElement::from_body(NilMatrix::unit(3, 2, 3, Fe::ONE));
        assert!(matches!(sub.try_mul(&off, &off), Err(Error::Mismatch(_))));
    }

    #[test]
    fn exp_examples() {
        let a = u(3, 3);
        let mut x = NilMatrix::zero(3);
        x.set(1, 2, Fe::ONE);
        x.set(2, 3, Fe::ONE);
        let e = a.trunc_exp(&x);
        assert_eq!(e.body().get(1, 3), Fe(2));
        assert_eq!(a.trunc_log(&e), x);
        let b = u(4, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let y = b.random_matrix(&mut rng);
            assert_eq!(b.trunc_exp(&y).body(), &y);
        }
    }

    #[test]
    fn exp_log_round_trip() {
        for q in [3u64, 5, 9] {
            let a = u(5, q);
            let mut rng = ChaCha8Rng::seed_from_u64(q);
            for _ in 0..100 {
                let x = a.random_matrix(&mut rng);
                assert_eq!(a.trunc_log(&a.trunc_exp(&x)), x);
                let g = a.random_element(&mut rng);
                assert_eq!(a.trunc_exp(&a.trunc_log(&g)), g);
            }
        }
    }

    #[test]
    fn nilpotency() {
        let a = u(5, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            assert!(a.is_nilpotent(&a.random_matrix(&mut rng)));
        }
    }
}
