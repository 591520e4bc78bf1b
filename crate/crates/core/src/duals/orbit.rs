//! Orbits of functionals under an algebra group, by breadth-first closure
//! under the group's generators.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraGroup, GroupElement};
use crate::duals::functional::Functional;
use crate::error::{Error, Result};
use crate::scalars::Fe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitKind {
    Left,
    Right,
    TwoSided,
    Coadjoint,
}

impl std::str::FromStr for OrbitKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<OrbitKind> {
        match s {
            "left" => Ok(OrbitKind::Left),
            "right" => Ok(OrbitKind::Right),
            "two-sided" | "two_sided" => Ok(OrbitKind::TwoSided),
            "coadjoint" => Ok(OrbitKind::Coadjoint),
            other => Err(Error::InvalidInput(format!("unknown orbit kind {other:?}"))),
        }
    }
}

/// Generators with their inverses, cached for orbit sweeps.
pub(crate) struct GeneratorSet {
    pub gens: Vec<GroupElement>,
    pub invs: Vec<GroupElement>,
}

impl GeneratorSet {
    pub fn of(group: &AlgebraGroup) -> GeneratorSet {
        let gens = group.generators();
        let invs = gens.iter().map(|g| group.inv(g)).collect();
        GeneratorSet { gens, invs }
    }
}

/// Closure of `seeds` under the maps in `step`, with canonical forms taken
/// relative to the group's algebra.
pub(crate) fn closure<F>(
    group: &AlgebraGroup,
    seeds: Vec<Functional>,
    what: &'static str,
    step: F,
) -> Result<Vec<Functional>>
where
    F: Fn(&Functional) -> Vec<Functional>,
{
    let lie = group.lie();
    let mut seen: HashSet<Vec<Fe>> = HashSet::new();
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    for s in seeds {
        let c = s.restrict_canonical(lie);
        if seen.insert(c.coeffs().to_vec()) {
            out.push(c.clone());
            frontier.push(c);
        }
    }
    while let Some(l) = frontier.pop() {
        for m in step(&l) {
            let m = m.restrict_canonical(lie);
            if !seen.contains(m.coeffs()) {
                if seen.len() as u64 >= group.cap() {
                    return Err(Error::CapExceeded {
                        what,
                        needed: seen.len() as u128 + 1,
                        cap: group.cap(),
                    });
                }
                seen.insert(m.coeffs().to_vec());
                out.push(m.clone());
                frontier.push(m);
            }
        }
    }
    out.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    Ok(out)
}

/// Orbit of λ (restricted to the group's algebra), sorted by coefficients.
/// Coadjoint orbit sizes are checked to be even powers of q.
pub fn orbit(group: &AlgebraGroup, lambda: &Functional, kind: OrbitKind) -> Result<Vec<Functional>> {
    if lambda.algebra() != group.algebra() {
        return Err(Error::Mismatch("functional and group live in different algebras".into()));
    }
    let gs = GeneratorSet::of(group);
    let out = match kind {
        OrbitKind::Left => closure(group, vec![lambda.clone()], "left orbit", |l| {
            gs.invs.iter().map(|gi| l.act_left_by_inverse(gi)).collect()
        })?,
        OrbitKind::Right => closure(group, vec![lambda.clone()], "right orbit", |l| {
            gs.invs.iter().map(|gi| l.act_right_by_inverse(gi)).collect()
        })?,
        OrbitKind::TwoSided => closure(group, vec![lambda.clone()], "two-sided orbit", |l| {
            gs.invs
                .iter()
                .flat_map(|gi| [l.act_left_by_inverse(gi), l.act_right_by_inverse(gi)])
                .collect()
        })?,
        OrbitKind::Coadjoint => closure(group, vec![lambda.clone()], "coadjoint orbit", |l| {
            gs.gens
                .iter()
                .zip(&gs.invs)
                .map(|(g, gi)| l.act_coadjoint_pair(g, gi))
                .collect()
        })?,
    };
    if kind == OrbitKind::Coadjoint {
        let q = group.algebra().field().q() as u128;
        match even_power_exponent(out.len() as u128, q) {
            Some(_) => {}
            None => {
                return Err(Error::Verification(format!(
                    "coadjoint orbit of size {} is not an even power of {q}",
                    out.len()
                )))
            }
        }
    }
    Ok(out)
}

/// e with size = q^e, if any.
pub fn power_exponent(size: u128, q: u128) -> Option<u32> {
    let mut s = size;
    let mut e = 0;
    while s > 1 {
        if s % q != 0 {
            return None;
        }
        s /= q;
        e += 1;
    }
    (s == 1).then_some(e)
}

/// e with size = q^{2e}, if any.
pub fn even_power_exponent(size: u128, q: u128) -> Option<u32> {
    power_exponent(size, q).filter(|e| e % 2 == 0).map(|e| e / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{toeplitz, Algebra, NilMatrix, Subspace};
    use crate::scalars::Field;

    #[test]
    fn coadjoint_orbit_of_corner() {
        for q in [2u64, 3, 4] {
            let f = Field::from_order(q).unwrap();
            let a = Algebra::full(3, f.clone());
            let g = AlgebraGroup::full(&a);
            let l = Functional::dual_unit(&a, 1, 3).unwrap();
            let orb = orbit(&g, &l, OrbitKind::Coadjoint).unwrap();
            assert_eq!(orb.len() as u64, q * q);
            assert!(orb.iter().all(|m| m.get(1, 3) == Fe::ONE));
        }
    }

    #[test]
    fn abelian_coadjoint_orbits_are_points() {
        let f = Field::from_order(3).unwrap();
        let (a, sub) = toeplitz(4, &f);
        let g = AlgebraGroup::new(&a, sub).unwrap();
        let k = Functional::dual_unit(&a, 1, 4).unwrap();
        assert_eq!(orbit(&g, &k, OrbitKind::Coadjoint).unwrap().len(), 1);
    }

    #[test]
    fn left_and_right_orbits_have_equal_size() {
        let f = Field::from_order(2).unwrap();
        let a = Algebra::full(4, f.clone());
        let g = AlgebraGroup::full(&a);
        for idx in 0..64u32 {
            let c: Vec<Fe> = (0..6).map(|b| Fe(((idx >> b) & 1) as u16)).collect();
            let l = Functional::from_coeffs(&a, c).unwrap();
            let left = orbit(&g, &l, OrbitKind::Left).unwrap();
            let right = orbit(&g, &l, OrbitKind::Right).unwrap();
            let two = orbit(&g, &l, OrbitKind::TwoSided).unwrap();
            assert_eq!(left.len(), right.len());
            let ls: HashSet<_> = left.iter().map(|m| m.coeffs().to_vec()).collect();
            let inter = right.iter().filter(|m| ls.contains(m.coeffs())).count();
            assert_eq!(two.len() * inter, left.len() * right.len());
        }
    }

    #[test]
    fn orbit_cap() {
        let f = Field::from_order(3).unwrap();
        let a = Algebra::full(3, f);
        let g = AlgebraGroup::full(&a).with_cap(4);
        let l = Functional::dual_unit(&a, 1, 3).unwrap();
        assert!(matches!(orbit(&g, &l, OrbitKind::Coadjoint), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn subgroup_orbits_use_restrictions() {
        let f = Field::from_order(2).unwrap();
        let a = Algebra::full(3, f.clone());
        let sub = Subspace::coordinate(&f, 3, [a.index(1, 3).unwrap(), a.index(2, 3).unwrap()]);
        let g = AlgebraGroup::new(&a, sub).unwrap();
        let l = Functional::dual_unit(&a, 1, 2).unwrap();
        // λ = e*_{12} restricts to zero on span{e13, e23}
        let orb = orbit(&g, &l, OrbitKind::Coadjoint).unwrap();
        assert_eq!(orb.len(), 1);
        assert!(orb[0].is_zero());
        let _ = NilMatrix::zero(3);
    }
}
