//! The splitting 𝔰̄ = 𝔞 ⊕ 𝔥 and the identification of 𝔞 with 𝔞_{r+1}(q).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{toeplitz, Algebra, AlgebraGroup, Decomposition, GroupElement, NilMatrix, Subspace};
use crate::algebra::ideal::{ideal_check, is_subalgebra};
use crate::duals::Functional;
use crate::error::{Error, Result};
use crate::exotic::technical::{constrained, nu, Technical};
use crate::scalars::Fe;

/// 𝔞 = {X : X_α = X_τ(α) on D, zero off D} ⊕ F_q e_{1,2r+1}.
pub fn a_subspace(t: &Technical) -> Subspace {
    let a = t.lambda.algebra();
    let r = t.atlas.r;
    let off_d: Vec<(usize, usize)> = a
        .positions()
        .iter()
        .copied()
        .filter(|p| !t.atlas.d.contains(p))
        .collect();
    let tied = constrained(a, &t.atlas, &[&t.atlas.d], &[&off_d]);
    let corner = Subspace::coordinate(a.field(), a.dim(), [a.index(1, 2 * r + 1).unwrap()]);
    tied.sum(&corner)
}

/// 𝔥 = {X ∈ 𝔩̄ : X_{1,2r+1} = 0}.
pub fn h_subspace(t: &Technical) -> Subspace {
    let a = t.lambda.algebra();
    let r = t.atlas.r;
    let corner = Subspace::from_constraints(a.field(), a.dim(), &[a.index(1, 2 * r + 1).unwrap()], &[]);
    t.chain.l_bar().intersect(&corner)
}

/// Y_{ij} = X_{ij} for j ≤ r and Y_{i,r+1} = X_{i,2r+1}, for i < j ≤ r+1.
pub fn to_toeplitz(x: &NilMatrix, r: usize) -> NilMatrix {
    let mut y = NilMatrix::zero(r + 1);
    for i in 1..=r {
        for j in i + 1..=r {
            y.set(i, j, x.get(i, j));
        }
        y.set(i, r + 1, x.get(i, 2 * r + 1));
    }
    y
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub a_dim: usize,
    pub h_dim: usize,
    /// 𝔞 + 𝔥 is direct and equals 𝔰̄.
    pub direct_sum_is_s_bar: bool,
    pub a_is_subalgebra: bool,
    pub h_two_sided_in_s_bar: bool,
    pub l_bar_two_sided_in_s_bar: bool,
    /// The coordinate map lands in 𝔞_{r+1}(q), is bijective and multiplicative on basis pairs.
    pub isomorphism: bool,
    /// e*_{1,2r+1} on 𝔞 agrees with κ(Y) = Y_{1,r+1} through the isomorphism.
    pub kappa_identified: bool,
    /// e*_{1,2r+1} vanishes on 𝔥.
    pub mu_kills_h: bool,
    /// gν = ν = νg on 𝔰̄ for every generator g of S̄.
    pub nu_central: bool,
    /// π(gh) = π(g)π(h) for sampled pairs in S̄, with π: S̄ → A_{r+1}(q).
    pub projection_multiplicative: bool,
    pub sampled_pairs: usize,
    pub passed: bool,
}

/// The full decomposition data, for use by later stages.
pub struct Quotient {
    pub decomposition: Decomposition,
    pub report: QuotientReport,
    pub toeplitz: (Algebra, Subspace),
}

fn iso_checks(t: &Technical, a_sub: &Subspace, target: &(Algebra, Subspace)) -> (bool, bool) {
    let alg = t.lambda.algebra();
    let r = t.atlas.r;
    let (ta, tsub) = target;
    let images: Vec<Vec<Fe>> = a_sub
        .basis()
        .iter()
        .map(|v| ta.coords(&to_toeplitz(&alg.from_coords(v), r)))
        .collect();
    let lands = images.iter().all(|y| tsub.contains(y));
    let bijective = Subspace::span(ta.field(), ta.dim(), images.iter().cloned()).dim() == a_sub.dim()
        && a_sub.dim() == tsub.dim();
    let mut multiplicative = true;
    for x in a_sub.basis() {
        for y in a_sub.basis() {
            let (mx, my) = (alg.from_coords(x), alg.from_coords(y));
            let lhs = to_toeplitz(&alg.mat_mul(&mx, &my), r);
            let rhs = ta.mat_mul(&to_toeplitz(&mx, r), &to_toeplitz(&my, r));
            multiplicative &= lhs == rhs;
        }
    }
    let corner = alg.index(1, 2 * r + 1).unwrap();
    let kappa_ok = a_sub
        .basis()
        .iter()
        .all(|v| v[corner] == to_toeplitz(&alg.from_coords(v), r).get(1, r + 1));
    (lands && bijective && multiplicative, kappa_ok)
}

fn nu_central(t: &Technical) -> Result<bool> {
    let s_bar = t.chain.s_bar();
    let n = nu(&t.lambda, t.atlas.r)?;
    let group = AlgebraGroup::new(t.lambda.algebra(), s_bar.clone())?;
    for g in group.generators() {
        let left = n.act_left(&g).sub(&n);
        let right = n.act_right(&g).sub(&n);
        if !left.kills(s_bar) || !right.kills(s_bar) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn random_in(sub: &Subspace, rng: &mut ChaCha8Rng) -> Vec<Fe> {
    let q = sub.field().q();
    let c: Vec<Fe> = (0..sub.dim()).map(|_| Fe(rng.gen_range(0..q) as u16)).collect();
    sub.combine(&c)
}

pub fn quotient(t: &Technical, samples: usize) -> Result<Quotient> {
    let alg = t.lambda.algebra();
    let r = t.atlas.r;
    let a_sub = a_subspace(t);
    let h_sub = h_subspace(t);
    let s_bar = t.chain.s_bar();
    let decomposition = Decomposition::new(alg, a_sub.clone(), h_sub.clone())
        .map_err(|e| Error::Verification(format!("𝔰̄ = 𝔞 ⊕ 𝔥 fails: {e}")))?;
    let target = toeplitz(r + 1, alg.field());
    let (isomorphism, kappa_identified) = iso_checks(t, &a_sub, &target);
    let corner = alg.index(1, 2 * r + 1).unwrap();
    let mu_kills_h = h_sub.basis().iter().all(|v| v[corner].is_zero());

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (ta, _) = &target;
    let pi = |g: &GroupElement| -> Result<GroupElement> {
        let a = decomposition.project(g)?;
        Ok(GroupElement::from_body(to_toeplitz(a.body(), r)))
    };
    let mut projection_multiplicative = true;
    for _ in 0..samples {
        let g = GroupElement::from_body(alg.from_coords(&random_in(s_bar, &mut rng)));
        let h = GroupElement::from_body(alg.from_coords(&random_in(s_bar, &mut rng)));
        let lhs = pi(&alg.mul(&g, &h))?;
        let rhs = ta.mul(&pi(&g)?, &pi(&h)?);
        projection_multiplicative &= lhs == rhs;
    }

    let report = QuotientReport {
        a_dim: a_sub.dim(),
        h_dim: h_sub.dim(),
        direct_sum_is_s_bar: decomposition.total() == s_bar,
        a_is_subalgebra: is_subalgebra(alg, &a_sub),
        h_two_sided_in_s_bar: ideal_check(alg, &h_sub, s_bar)?.is_two_sided(),
        l_bar_two_sided_in_s_bar: ideal_check(alg, t.chain.l_bar(), s_bar)?.is_two_sided(),
        isomorphism,
        kappa_identified,
        mu_kills_h,
        nu_central: nu_central(t)?,
        projection_multiplicative,
        sampled_pairs: samples,
        passed: false,
    };
    let passed = report.direct_sum_is_s_bar
        && report.a_is_subalgebra
        && report.h_two_sided_in_s_bar
        && report.l_bar_two_sided_in_s_bar
        && report.isomorphism
        && report.kappa_identified
        && report.mu_kills_h
        && report.nu_central
        && report.projection_multiplicative;
    Ok(Quotient {
        decomposition,
        report: QuotientReport { passed, ..report },
        toeplitz: target,
    })
}

/// μ = e*_{1,2r+1} as a functional on the ambient algebra.
pub fn mu(t: &Technical) -> Result<Functional> {
    Functional::dual_unit(t.lambda.algebra(), 1, 2 * t.atlas.r + 1)
}

pub fn a_subalgebra(r: usize, field: &crate::scalars::Field) -> Result<QuotientReport> {
    let t = crate::exotic::technical::technical(r, field)?;
    Ok(quotient(&t, 32)?.report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exotic::technical::technical;
    use crate::scalars::Field;

    #[test]
    fn splitting_r2_r3() {
        for q in [2u64, 3] {
            let f = Field::from_order(q).unwrap();
            for r in 2..=3 {
                let t = technical(r, &f).unwrap();
                let qt = quotient(&t, 16).unwrap();
                assert!(qt.report.passed, "r={r} q={q}: {:?}", qt.report);
                assert_eq!(qt.report.a_dim, r);
            }
        }
    }

    #[test]
    fn a3_over_f2_has_four_elements() {
        let f = Field::from_order(2).unwrap();
        let t = technical(2, &f).unwrap();
        let qt = quotient(&t, 4).unwrap();
        let (ta, tsub) = &qt.toeplitz;
        let g = AlgebraGroup::new(ta, tsub.clone()).unwrap();
        assert_eq!(g.order(), Some(4));
    }
}
