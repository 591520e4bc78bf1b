//! Algebra groups 1 + 𝔤 for subalgebras 𝔤 of a pattern algebra.

use crate::algebra::matrix::{Algebra, GroupElement};
use crate::algebra::subspace::Subspace;
use crate::error::{Error, Result};
use crate::scalars::Fe;

pub const DEFAULT_CAP: u64 = 1 << 22;

/// The group 1 + 𝔤. Elements are indexed by the base-q digits of their
/// coordinates in the echelon basis of 𝔤.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraGroup {
    algebra: Algebra,
    sub: Subspace,
    cap: u64,
}

impl AlgebraGroup {
    /// 1 + 𝔤, checking that 𝔤 is closed under multiplication.
    pub fn new(algebra: &Algebra, sub: Subspace) -> Result<AlgebraGroup> {
        if sub.ambient() != algebra.dim() || sub.field() != algebra.field() {
            return Err(Error::Mismatch("subspace does not live in this algebra".into()));
        }
        let g = AlgebraGroup {
            algebra: algebra.clone(),
            sub,
            cap: DEFAULT_CAP,
        };
        if !crate::algebra::ideal::is_subalgebra(algebra, &g.sub) {
            return Err(Error::InvalidInput("subspace is not a subalgebra".into()));
        }
        Ok(g)
    }

    /// The pattern group 1 + 𝔲_{n,P}(q).
    pub fn full(algebra: &Algebra) -> AlgebraGroup {
        AlgebraGroup {
            algebra: algebra.clone(),
            sub: Subspace::full(algebra.field(), algebra.dim()),
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_cap(mut self, cap: u64) -> AlgebraGroup {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn lie(&self) -> &Subspace {
        &self.sub
    }

    pub fn dim(&self) -> usize {
        self.sub.dim()
    }

    /// |G| = q^dim, if it fits in 128 bits.
    pub fn order(&self) -> Option<u128> {
        self.sub.order()
    }

    /// |G| as a usize after checking the enumeration cap.
    pub fn checked_size(&self, what: &'static str) -> Result<usize> {
        let q = self.algebra.field().q() as u128;
        let needed = q.checked_pow(self.dim() as u32).unwrap_or(u128::MAX);
        if needed > self.cap as u128 {
            return Err(Error::CapExceeded {
                what,
                needed,
                cap: self.cap,
            });
        }
        Ok(needed as usize)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.body().n() == self.algebra.n() && self.sub.contains(&self.algebra.coords(g.body()))
    }

    /// Element with the given index.
    pub fn element(&self, mut index: usize) -> GroupElement {
        let q = self.algebra.field().q() as usize;
        let c: Vec<Fe> = (0..self.dim())
            .map(|_| {
                let d = index % q;
                index /= q;
                Fe(d as u16)
            })
            .collect();
        GroupElement::from_body(self.algebra.from_coords(&self.sub.combine(&c)))
    }

    /// Index of an element known to lie in the group.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        let q = self.algebra.field().q() as usize;
        let body = g.body();
        let positions = self.algebra.positions();
        self.sub.pivots().iter().rev().fold(0usize, |acc, &p| {
            let (i, j) = positions[p];
            acc * q + body.get(i, j).rep() as usize
        })
    }

    /// Every element, in index order.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        let size = self.checked_size("group enumeration")?;
        Ok((0..size).map(|k| self.element(k)).collect())
    }

    /// 1 + t·b for basis vectors b of 𝔤 and t in an F_p-basis of F_q; these
    /// generate the group since they span 𝔤 modulo 𝔤².
    pub fn generators(&self) -> Vec<GroupElement> {
        let f = self.algebra.field();
        let mut out = Vec::new();
        for b in self.sub.basis() {
            for t in f.prime_basis() {
                let v: Vec<Fe> = b.iter().map(|&x| f.mul(t, x)).collect();
                out.push(GroupElement::from_body(self.algebra.from_coords(&v)));
            }
        }
        out
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.algebra.mul(g, h)
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        self.algebra.inv(g)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.algebra.n())
    }

    /// The algebra subgroup 1 + 𝔥 for a subalgebra 𝔥 ⊆ 𝔤.
    pub fn subgroup(&self, h: Subspace) -> Result<AlgebraGroup> {
        if !h.is_subspace_of(&self.sub) {
            return Err(Error::Mismatch("subgroup algebra is not contained in the group algebra".into()));
        }
        Ok(AlgebraGroup::new(&self.algebra, h)?.with_cap(self.cap))
    }

    pub fn is_abelian(&self) -> bool {
        let a = &self.algebra;
        let mats: Vec<_> = self.sub.basis().iter().map(|b| a.from_coords(b)).collect();
        mats.iter().enumerate().all(|(i, x)| {
            mats[i + 1..]
                .iter()
                .all(|y| a.mat_mul(x, y) == a.mat_mul(y, x))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::toeplitz;
    use crate::scalars::Field;
    use std::collections::HashSet;

    #[test]
    fn enumeration_sizes() {
        let f2 = Field::from_order(2).unwrap();
        let f3 = Field::from_order(3).unwrap();
        let g = AlgebraGroup::full(&Algebra::full(3, f2.clone()));
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 8);
        let distinct: HashSet<_> = els.iter().cloned().collect();
        assert_eq!(distinct.len(), 8);
        for (k, e) in els.iter().enumerate() {
            assert_eq!(g.index_of(e), k);
        }
        assert_eq!(AlgebraGroup::full(&Algebra::full(4, f3)).elements().unwrap().len(), 729);
        let (alg, a3) = toeplitz(3, &f2);
        let a = AlgebraGroup::new(&alg, a3).unwrap();
        assert_eq!(a.elements().unwrap().len(), 4);
        assert!(a.is_abelian());
    }

    #[test]
    fn cap_is_enforced() {
        let f = Field::from_order(2).unwrap();
        let g = AlgebraGroup::full(&Algebra::full(4, f)).with_cap(10);
        assert!(matches!(g.elements(), Err(Error::CapExceeded { needed: 64, .. })));
    }

    #[test]
    fn generators_generate() {
        let f = Field::from_order(4).unwrap();
        let (alg, a) = toeplitz(4, &f);
        let g = AlgebraGroup::new(&alg, a).unwrap();
        let gens = g.generators();
        let mut seen = HashSet::from([g.identity()]);
        let mut frontier = vec![g.identity()];
        while let Some(x) = frontier.pop() {
            for s in &gens {
                let y = g.mul(&x, s);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(seen.len() as u128, g.order().unwrap());
    }
}
