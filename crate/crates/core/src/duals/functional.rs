//! Linear functionals λ ∈ 𝔫* and the left, right and coadjoint actions.

use std::fmt;

use crate::algebra::linalg;
use crate::algebra::{Algebra, GroupElement, NilMatrix, Subspace};
use crate::error::{Error, Result};
use crate::scalars::Fe;

/// λ stored densely by its values λ_{ij} = λ(e_{ij}) on pattern positions.
#[derive(Clone)]
pub struct Functional {
    algebra: Algebra,
    coeffs: Vec<Fe>,
}

impl PartialEq for Functional {
    fn eq(&self, other: &Functional) -> bool {
        self.coeffs == other.coeffs && self.algebra == other.algebra
    }
}

impl Eq for Functional {}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functional{:?}", self.entries())
    }
}

impl Functional {
    pub fn zero(algebra: &Algebra) -> Functional {
        Functional {
            algebra: algebra.clone(),
            coeffs: vec![Fe::ZERO; algebra.dim()],
        }
    }

    pub fn from_coeffs(algebra: &Algebra, coeffs: Vec<Fe>) -> Result<Functional> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::Mismatch(format!(
                "{} coefficients for an algebra of dimension {}",
                coeffs.len(),
                algebra.dim()
            )));
        }
        Ok(Functional {
            algebra: algebra.clone(),
            coeffs,
        })
    }

    /// Σ c e*_{ij} from (i, j, c) triples; repeated positions add up.
    pub fn from_entries(algebra: &Algebra, entries: &[(usize, usize, Fe)]) -> Result<Functional> {
        let mut l = Functional::zero(algebra);
        let f = algebra.field();
        for &(i, j, c) in entries {
            if c.rep() >= f.q() {
                return Err(Error::InvalidInput(format!("{} is not an element of F_{}", c.rep(), f.q())));
            }
            let k = algebra.index_checked(i, j)?;
            l.coeffs[k] = f.add(l.coeffs[k], c);
        }
        Ok(l)
    }

    /// The dual basis element e*_{ij}.
    pub fn dual_unit(algebra: &Algebra, i: usize, j: usize) -> Result<Functional> {
        Functional::from_entries(algebra, &[(i, j, Fe::ONE)])
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.algebra.index(i, j).map_or(Fe::ZERO, |k| self.coeffs[k])
    }

    /// Nonzero values as ((i, j), c), row-major.
    pub fn entries(&self) -> Vec<((usize, usize), Fe)> {
        self.algebra
            .positions()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&p, &c)| (p, c))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Functional) -> Functional {
        let f = self.algebra.field();
        Functional {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Functional) -> Functional {
        let f = self.algebra.field();
        Functional {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    /// λ(X) = Σ λ_{ij} X_{ij}.
    pub fn eval(&self, x: &NilMatrix) -> Fe {
        let f = self.algebra.field();
        self.algebra
            .positions()
            .iter()
            .zip(&self.coeffs)
            .fold(Fe::ZERO, |acc, (&(i, j), &c)| {
                if c.is_zero() {
                    acc
                } else {
                    f.mul_add(acc, c, x.get(i, j))
                }
            })
    }

    pub fn eval_coords(&self, v: &[Fe]) -> Fe {
        linalg::dot(self.algebra.field(), &self.coeffs, v)
    }

    /// B_λ(X, Y) = λ(XY).
    pub fn bilinear(&self, x: &NilMatrix, y: &NilMatrix) -> Result<Fe> {
        self.algebra.try_coords(x)?;
        self.algebra.try_coords(y)?;
        Ok(self.eval(&self.algebra.mat_mul(x, y)))
    }

    /// Coordinates of X ↦ λ(XY) for fixed Y: the matrix ΛYᵀ read on the pattern.
    pub fn right_partner(&self, y: &NilMatrix) -> Vec<Fe> {
        let a = &self.algebra;
        let f = a.field();
        let mut out = vec![Fe::ZERO; a.dim()];
        // (ΛYᵀ)_{ik} = Σ_j Λ_{ij} Y_{kj}
        for (&(i, j), &l) in a.positions().iter().zip(&self.coeffs) {
            if l.is_zero() {
                continue;
            }
            for k in 1..j {
                let yv = y.get(k, j);
                if yv.is_zero() {
                    continue;
                }
                if let Some(idx) = a.index(i, k) {
                    out[idx] = f.mul_add(out[idx], l, yv);
                }
            }
        }
        out
    }

    /// Coordinates of Y ↦ λ(XY) for fixed X: the matrix XᵀΛ read on the pattern.
    pub fn left_partner(&self, x: &NilMatrix) -> Vec<Fe> {
        let a = &self.algebra;
        let f = a.field();
        let mut out = vec![Fe::ZERO; a.dim()];
        // (XᵀΛ)_{kj} = Σ_i X_{ik} Λ_{ij}
        for (&(i, j), &l) in a.positions().iter().zip(&self.coeffs) {
            if l.is_zero() {
                continue;
            }
            for k in i + 1..j {
                let xv = x.get(i, k);
                if xv.is_zero() {
                    continue;
                }
                if let Some(idx) = a.index(k, j) {
                    out[idx] = f.mul_add(out[idx], xv, l);
                }
            }
        }
        out
    }

    /// The functional X ↦ λ(A X) for A = 1 + Y.
    fn premul(&self, y: &NilMatrix) -> Functional {
        let f = self.algebra.field();
        let extra = self.left_partner(y);
        Functional {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&extra).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    /// The functional X ↦ λ(X A) for A = 1 + Y.
    fn postmul(&self, y: &NilMatrix) -> Functional {
        let f = self.algebra.field();
        let extra = self.right_partner(y);
        Functional {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&extra).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    /// gλ(X) = λ(g⁻¹X).
    pub fn act_left(&self, g: &GroupElement) -> Functional {
        self.premul(self.algebra.inv(g).body())
    }

    /// λg(X) = λ(Xg⁻¹).
    pub fn act_right(&self, g: &GroupElement) -> Functional {
        self.postmul(self.algebra.inv(g).body())
    }

    /// λ^g(X) = λ(gXg⁻¹), equal to g⁻¹λg.
    pub fn act_coadjoint(&self, g: &GroupElement) -> Functional {
        let inv = self.algebra.inv(g);
        self.premul(g.body()).postmul(inv.body())
    }

    /// Variants taking g⁻¹ directly, for loops that cache inverses.
    pub(crate) fn act_left_by_inverse(&self, g_inv: &GroupElement) -> Functional {
        self.premul(g_inv.body())
    }

    pub(crate) fn act_right_by_inverse(&self, g_inv: &GroupElement) -> Functional {
        self.postmul(g_inv.body())
    }

    pub(crate) fn act_coadjoint_pair(&self, g: &GroupElement, g_inv: &GroupElement) -> Functional {
        self.premul(g.body()).postmul(g_inv.body())
    }

    /// Canonical representative of λ restricted to the subalgebra `sub`:
    /// the values on the echelon basis placed at the pivot positions.
    pub fn restrict_canonical(&self, sub: &Subspace) -> Functional {
        let mut coeffs = vec![Fe::ZERO; self.algebra.dim()];
        for (row, &p) in sub.basis().iter().zip(sub.pivots()) {
            coeffs[p] = self.eval_coords(row);
        }
        Functional {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    /// Whether λ vanishes on the subspace.
    pub fn kills(&self, sub: &Subspace) -> bool {
        sub.basis().iter().all(|b| self.eval_coords(b).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bilinear_examples() {
        let a = Algebra::full(3, Field::from_order(2).unwrap());
        let l = Functional::dual_unit(&a, 1, 3).unwrap();
        let e12 = NilMatrix::unit(3, 1, 2, Fe::ONE);
        let e23 = NilMatrix::unit(3, 2, 3, Fe::ONE);
        assert_eq!(l.bilinear(&e12, &e23).unwrap(), Fe::ONE);
        assert_eq!(l.bilinear(&e23, &e12).unwrap(), Fe::ZERO);
    }

    #[test]
    fn left_action_example() {
        let f = Field::from_order(3).unwrap();
        let a = Algebra::full(3, f.clone());
        let l = Functional::dual_unit(&a, 1, 3).unwrap();
        let g = GroupElement::from_body(NilMatrix::unit(3, 1, 2, Fe::ONE));
        let expect = Functional::from_entries(&a, &[(1, 3, Fe::ONE), (2, 3, f.from_int(-1))]).unwrap();
        assert_eq!(l.act_left(&g), expect);
        assert_eq!(l.act_coadjoint(&GroupElement::identity(3)), l);
    }

    #[test]
    fn actions_match_definitions() {
        let a = Algebra::full(5, Field::from_order(3).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let l = Functional::from_coeffs(&a, a.coords(&a.random_matrix(&mut rng))).unwrap();
            let g = a.random_element(&mut rng);
            let h = a.random_element(&mut rng);
            let x = a.random_matrix(&mut rng);
            let y = a.random_matrix(&mut rng);
            let gi = a.inv(&g);
            let with_one = |m: &NilMatrix, elt: &GroupElement| a.add(m, &a.mat_mul(elt.body(), m));
            let right_one = |m: &NilMatrix, elt: &GroupElement| a.add(m, &a.mat_mul(m, elt.body()));
            // gλ(X) = λ(g⁻¹X), λg(X) = λ(Xg⁻¹), λ^g(X) = λ(gXg⁻¹)
            assert_eq!(l.act_left(&g).eval(&x), l.eval(&with_one(&x, &gi)));
            assert_eq!(l.act_right(&g).eval(&x), l.eval(&right_one(&x, &gi)));
            let gxg = right_one(&with_one(&x, &g), &gi);
            assert_eq!(l.act_coadjoint(&g).eval(&x), l.eval(&gxg));
            assert_eq!(l.act_coadjoint(&g), l.act_left(&gi).act_right(&g));
            // the two actions commute
            assert_eq!(l.act_left(&g).act_right(&h), l.act_right(&h).act_left(&g));
            assert_eq!(l.bilinear(&x, &y).unwrap(), l.eval(&a.mat_mul(&x, &y)));
            assert_eq!(linalg::dot(a.field(), &l.right_partner(&y), &a.coords(&x)), l.eval(&a.mat_mul(&x, &y)));
            assert_eq!(linalg::dot(a.field(), &l.left_partner(&x), &a.coords(&y)), l.eval(&a.mat_mul(&x, &y)));
        }
    }
}
