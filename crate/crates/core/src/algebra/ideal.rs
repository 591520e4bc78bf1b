//! Ideal tests and projections 𝔫 = 𝔞 ⊕ 𝔥 onto a complementary subalgebra.

use serde::Serialize;

use crate::algebra::linalg::{self, Row};
use crate::algebra::matrix::{Algebra, GroupElement, NilMatrix};
use crate::algebra::subspace::Subspace;
use crate::error::{Error, Result};
use crate::scalars::Fe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    TwoSided,
    Right,
    Left,
    Subalgebra,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub subalgebra: bool,
    /// h·𝔫 ⊆ h
    pub right_ideal: bool,
    /// 𝔫·h ⊆ h
    pub left_ideal: bool,
}

impl IdealReport {
    pub fn kind(&self) -> IdealKind {
        match (self.left_ideal, self.right_ideal, self.subalgebra) {
            (true, true, _) => IdealKind::TwoSided,
            (false, true, _) => IdealKind::Right,
            (true, false, _) => IdealKind::Left,
            (false, false, true) => IdealKind::Subalgebra,
            _ => IdealKind::None,
        }
    }

    pub fn is_two_sided(&self) -> bool {
        self.left_ideal && self.right_ideal
    }
}

fn basis_mats(a: &Algebra, s: &Subspace) -> Vec<NilMatrix> {
    s.basis().iter().map(|b| a.from_coords(b)).collect()
}

fn products_in(a: &Algebra, xs: &[NilMatrix], ys: &[NilMatrix], target: &Subspace) -> bool {
    xs.iter()
        .all(|x| ys.iter().all(|y| target.contains(&a.coords(&a.mat_mul(x, y)))))
}

pub fn is_subalgebra(a: &Algebra, s: &Subspace) -> bool {
    let m = basis_mats(a, s);
    products_in(a, &m, &m, s)
}

/// Classifies `h` inside the subalgebra `within` by basis products.
pub fn ideal_check(a: &Algebra, h: &Subspace, within: &Subspace) -> Result<IdealReport> {
    if h.ambient() != a.dim() || within.ambient() != a.dim() || !h.is_subspace_of(within) {
        return Err(Error::Mismatch("subspace is not contained in the ambient algebra".into()));
    }
    let hm = basis_mats(a, h);
    let wm = basis_mats(a, within);
    Ok(IdealReport {
        subalgebra: products_in(a, &hm, &hm, h),
        right_ideal: products_in(a, &hm, &wm, h),
        left_ideal: products_in(a, &wm, &hm, h),
    })
}

/// A direct sum 𝔞 ⊕ 𝔥 with 𝔞 a subalgebra and 𝔥 a two-sided ideal, and
/// the projections π̃(a + h) = a and π(1 + a + h) = 1 + a.
#[derive(Clone, Debug)]
pub struct Decomposition {
    algebra: Algebra,
    a: Subspace,
    h: Subspace,
    total: Subspace,
    a_dim: usize,
    stacked: Vec<Row>,
    pivots: Vec<usize>,
    transform: Vec<Row>,
}

impl Decomposition {
    pub fn new(algebra: &Algebra, a: Subspace, h: Subspace) -> Result<Decomposition> {
        let f = algebra.field();
        let stacked: Vec<Row> = a.basis().iter().chain(h.basis()).cloned().collect();
        let k = stacked.len();
        let mut rows = stacked.clone();
        let mut transform: Vec<Row> = (0..k)
            .map(|i| (0..k).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }).collect())
            .collect();
        let pivots = linalg::rref_with(f, &mut rows, Some(&mut transform));
        if pivots.len() != k {
            return Err(Error::InvalidInput("the sum of the two subspaces is not direct".into()));
        }
        let total = Subspace::span(f, algebra.dim(), stacked.iter().cloned());
        if !is_subalgebra(algebra, &a) {
            return Err(Error::InvalidInput("complement is not a subalgebra".into()));
        }
        if !ideal_check(algebra, &h, &total)?.is_two_sided() {
            return Err(Error::InvalidInput("kernel is not a two-sided ideal".into()));
        }
        Ok(Decomposition {
            algebra: algebra.clone(),
            a_dim: a.dim(),
            a,
            h,
            total,
            stacked,
            pivots,
            transform,
        })
    }

    pub fn complement(&self) -> &Subspace {
        &self.a
    }

    pub fn ideal(&self) -> &Subspace {
        &self.h
    }

    pub fn total(&self) -> &Subspace {
        &self.total
    }

    /// Splits coordinates v = a + h.
    pub fn split(&self, v: &[Fe]) -> Result<(Row, Row)> {
        if !self.total.contains(v) {
            return Err(Error::Mismatch("vector lies outside 𝔞 ⊕ 𝔥".into()));
        }
        let f = self.algebra.field();
        let k = self.stacked.len();
        let mut c = vec![Fe::ZERO; k];
        for (t, &p) in self.transform.iter().zip(&self.pivots) {
            linalg::axpy(f, &mut c, v[p], t);
        }
        let mut a_part = vec![Fe::ZERO; v.len()];
        let mut h_part = vec![Fe::ZERO; v.len()];
        for (j, row) in self.stacked.iter().enumerate() {
            let dst = if j < self.a_dim { &mut a_part } else { &mut h_part };
            linalg::axpy(f, dst, c[j], row);
        }
        Ok((a_part, h_part))
    }

    /// π̃ on matrices.
    pub fn project_matrix(&self, x: &NilMatrix) -> Result<NilMatrix> {
        let (a, _) = self.split(&self.algebra.try_coords(x)?)?;
        Ok(self.algebra.from_coords(&a))
    }

    /// π(1 + X) = 1 + π̃(X).
    pub fn project(&self, g: &GroupElement) -> Result<GroupElement> {
        Ok(GroupElement::from_body(self.project_matrix(g.body())?))
    }

    /// Checks π(gh) = π(g)π(h) on the given pairs.
    pub fn respects_products(&self, pairs: &[(GroupElement, GroupElement)]) -> Result<bool> {
        for (g, h) in pairs {
            let lhs = self.project(&self.algebra.mul(g, h))?;
            let rhs = self.algebra.mul(&self.project(g)?, &self.project(h)?);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::AlgebraGroup;
    use crate::scalars::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn coord(a: &Algebra, pos: &[(usize, usize)]) -> Subspace {
        Subspace::coordinate(a.field(), a.dim(), pos.iter().map(|&(i, j)| a.index(i, j).unwrap()))
    }

    #[test]
    fn ideal_examples() {
        let a = Algebra::full(3, Field::from_order(2).unwrap());
        let all = Subspace::full(a.field(), a.dim());
        assert_eq!(ideal_check(&a, &coord(&a, &[(1, 3)]), &all).unwrap().kind(), IdealKind::TwoSided);
        let r = ideal_check(&a, &coord(&a, &[(1, 2)]), &all).unwrap();
        assert!(!r.is_two_sided());
        assert!(!r.right_ideal);
        assert_eq!(r.kind(), IdealKind::Left);
        assert_eq!(ideal_check(&a, &coord(&a, &[(2, 3)]), &all).unwrap().kind(), IdealKind::Right);
        let other = Algebra::full(4, Field::from_order(2).unwrap());
        let big = Subspace::full(other.field(), other.dim());
        assert!(ideal_check(&a, &big, &all).is_err());
    }

    #[test]
    fn projection_of_u3() {
        let a = Algebra::full(3, Field::from_order(3).unwrap());
        let d = Decomposition::new(&a, coord(&a, &[(1, 2)]), coord(&a, &[(1, 3), (2, 3)])).unwrap();
        let mut x = NilMatrix::unit(3, 1, 2, Fe::ONE);
        x.set(1, 3, Fe::ONE);
        let p = d.project(&GroupElement::from_body(x)).unwrap();
        assert_eq!(p.body(), &NilMatrix::unit(3, 1, 2, Fe::ONE));
    }

    #[test]
    fn projection_is_homomorphism() {
        let a = Algebra::full(4, Field::from_order(2).unwrap());
        let d = Decomposition::new(
            &a,
            coord(&a, &[(1, 2), (1, 3), (2, 3)]),
            coord(&a, &[(1, 4), (2, 4), (3, 4)]),
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pairs: Vec<_> = (0..50)
            .map(|_| (a.random_element(&mut rng), a.random_element(&mut rng)))
            .collect();
        assert!(d.respects_products(&pairs).unwrap());
        // a complement that is not a subalgebra is rejected
        assert!(Decomposition::new(&a, coord(&a, &[(1, 2), (2, 3)]), coord(&a, &[(1, 3), (1, 4), (2, 4), (3, 4)])).is_err());
        let _ = AlgebraGroup::full(&a);
    }
}
