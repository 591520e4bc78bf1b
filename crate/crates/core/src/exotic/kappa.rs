//! The abelian groups A_n(q) = 1 + 𝔞_n(q) and the supercharacter χ_κ with
//! κ(X) = X_{1,n}.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{toeplitz, AlgebraGroup, GroupElement, Subspace};
use crate::characters::{
    abelian_dual, exp_kirillov, field_of_values_linear, homomorphism_test, kirillov, supercharacter, theta_lambda,
    ClassFunction, LinearCharacter,
};
use crate::duals::Functional;
use crate::error::{Error, Result};
use crate::scalars::{Cyclo, Field};

/// Largest power of p strictly below n.
pub fn largest_power_below(p: u32, n: usize) -> u32 {
    let mut r = 1u32;
    while (r * p) < n as u32 {
        r *= p;
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// First-row entries a_2, …, a_n of the two elements, as integer codes.
    pub g: Vec<u32>,
    pub h: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KappaReport {
    pub n: usize,
    pub q: u32,
    pub p: u32,
    pub group_order: u64,
    pub max_element_order: u32,
    /// p times the largest power of p below n.
    pub predicted_max_order: u32,
    pub chi_degree_exponent: usize,
    /// χ_κ agrees with q^{n−2} θ(g_{1,n}) on L̄_κ and 0 elsewhere, with the
    /// two-sided orbit sum and with Ind from L̄_κ.
    pub chi_routes_agree: bool,
    pub constituent_count: usize,
    pub constituents_distinct: bool,
    pub constituents_sum_to_chi: bool,
    /// Root-of-unity order of each constituent's values, sorted.
    pub constituent_root_orders: Vec<u32>,
    pub max_conductor: u32,
    /// Least k with every constituent value in Q(ζ_{p^k}).
    pub max_level: u32,
    /// Some constituent takes every root of unity of order max_conductor.
    pub some_constituent_takes_all_roots: bool,
    pub kirillov_is_character: bool,
    pub kirillov_witness: Option<Witness>,
    pub exp_kirillov_is_character: bool,
    pub exp_kirillov_witness: Option<Witness>,
}

/// Everything the report is built from, for callers needing the tables.
pub struct KappaAnalysis {
    pub group: AlgebraGroup,
    pub kappa: Functional,
    pub chi: ClassFunction,
    pub constituents: Vec<LinearCharacter>,
    pub report: KappaReport,
}

fn first_row(g: &GroupElement, n: usize) -> Vec<u32> {
    (2..=n).map(|j| g.body().get(1, j).rep()).collect()
}

pub fn analyse_kappa(n: usize, field: &Field, cap: u64) -> Result<KappaAnalysis> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("A_n(q) needs n ≥ 2, got {n}")));
    }
    let (alg, sub) = toeplitz(n, field);
    let group = AlgebraGroup::new(&alg, sub)?.with_cap(cap);
    let size = group.checked_size("A_n(q)")?;
    let els = group.elements()?;
    let kappa = Functional::dual_unit(&alg, 1, n)?;
    let q = field.q();
    let p = field.p();

    let scale = Cyclo::from_int(1, (q as i64).pow(n as u32 - 2));
    let formula = ClassFunction::from_fn(&group, |g| {
        let body = g.body();
        let in_l = body.support().iter().all(|&((i, j), _)| (i, j) == (1, n));
        if in_l {
            &scale * &field.theta(body.get(1, n))
        } else {
            Cyclo::zero(1)
        }
    })?;
    let chi = supercharacter(&group, &kappa)?;
    let corner = Subspace::coordinate(field, alg.dim(), [alg.index(1, n).unwrap()]);
    let l_group = group.subgroup(corner)?;
    let theta_l = theta_lambda(&l_group, &kappa)?;
    let induced = theta_l.induce(&group)?;
    let chi_routes_agree = chi.values() == formula.values() && induced.values() == formula.values();

    let dual = abelian_dual(&group)?;
    let constituents = dual.constituents_of_induced(&l_group, &theta_l)?;
    let distinct: BTreeSet<&Vec<u32>> = constituents.iter().map(|c| &c.exps).collect();
    let mut sum = vec![Cyclo::zero(1); size];
    for c in &constituents {
        for (k, s) in sum.iter_mut().enumerate() {
            *s = &*s + &c.value(k);
        }
    }
    let constituents_sum_to_chi = sum.as_slice() == chi.values();
    for c in &constituents {
        let cf = c.to_class_function(&group)?;
        if cf.inner_product(&chi)? != Cyclo::one(1) {
            return Err(Error::Verification("a constituent has multiplicity other than one".into()));
        }
    }

    let mut root_orders: Vec<u32> = constituents.iter().map(|c| c.root_order()).collect();
    root_orders.sort_unstable();
    let max_conductor = root_orders.last().copied().unwrap_or(1);
    let mut max_level = 0;
    for c in &constituents {
        max_level = max_level.max(field_of_values_linear(c)?.level);
    }
    let some_constituent_takes_all_roots = constituents.iter().any(|c| {
        let m = c.m;
        let step = m / max_conductor;
        let hit: BTreeSet<u32> = c.exps.iter().copied().collect();
        (0..max_conductor).all(|k| hit.contains(&(k * step)))
    });

    let max_element_order = els
        .iter()
        .map(|x| {
            let mut y = x.clone();
            let mut k = 1;
            while !y.is_identity() {
                y = group.mul(&y, x);
                k += 1;
            }
            k
        })
        .max()
        .unwrap_or(1);

    let witness = |w: Option<(usize, usize)>| {
        w.map(|(a, b)| Witness {
            g: first_row(&els[a], n),
            h: first_row(&els[b], n),
        })
    };
    let psi = kirillov(&group, &kappa)?;
    let psi_test = homomorphism_test(&group, &psi)?;
    let exp_psi = exp_kirillov(&group, &kappa)?;
    let exp_test = homomorphism_test(&group, &exp_psi)?;

    let report = KappaReport {
        n,
        q,
        p,
        group_order: size as u64,
        max_element_order,
        predicted_max_order: p * largest_power_below(p, n),
        chi_degree_exponent: n - 2,
        chi_routes_agree,
        constituent_count: constituents.len(),
        constituents_distinct: distinct.len() == constituents.len(),
        constituents_sum_to_chi,
        constituent_root_orders: root_orders,
        max_conductor,
        max_level,
        some_constituent_takes_all_roots,
        kirillov_is_character: psi_test.is_homomorphism,
        kirillov_witness: witness(psi_test.witness),
        exp_kirillov_is_character: exp_test.is_homomorphism,
        exp_kirillov_witness: witness(exp_test.witness),
    };
    Ok(KappaAnalysis {
        group,
        kappa,
        chi,
        constituents,
        report,
    })
}

pub fn kappa_analysis(n: usize, field: &Field) -> Result<KappaReport> {
    Ok(analyse_kappa(n, field, crate::algebra::DEFAULT_CAP)?.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_q2() {
        let f = Field::from_order(2).unwrap();
        let k = analyse_kappa(3, &f, 1 << 20).unwrap();
        let rep = &k.report;
        assert!(rep.chi_routes_agree);
        assert_eq!(k.chi.degree(), &Cyclo::from_int(1, 2));
        assert_eq!(rep.constituent_count, 2);
        assert_eq!(rep.max_conductor, 4);
        assert!(rep.some_constituent_takes_all_roots);
        assert!(!rep.kirillov_is_character);
        assert!(!rep.exp_kirillov_is_character);
        // the constituents are complex conjugates of each other
        let a = &k.constituents[0];
        let b = &k.constituents[1];
        for i in 0..a.exps.len() {
            assert_eq!(a.value(i).conj(), b.value(i));
        }
    }

    #[test]
    fn n2_kirillov_is_character() {
        for q in [2u64, 3, 4, 5] {
            let rep = kappa_analysis(2, &Field::from_order(q).unwrap()).unwrap();
            assert!(rep.kirillov_is_character);
            assert!(rep.exp_kirillov_is_character);
            assert_eq!(rep.constituent_count, 1);
        }
    }

    #[test]
    fn n3_q3_exp_kirillov_is_character() {
        let rep = kappa_analysis(3, &Field::from_order(3).unwrap()).unwrap();
        assert!(rep.exp_kirillov_is_character);
        assert!(!rep.kirillov_is_character);
        assert!(rep.kirillov_witness.is_some());
    }

    #[test]
    fn n4_q3_exp_kirillov_fails() {
        let rep = kappa_analysis(4, &Field::from_order(3).unwrap()).unwrap();
        assert!(!rep.exp_kirillov_is_character);
        assert_eq!(rep.max_element_order, 9);
        assert_eq!(rep.predicted_max_order, 9);
    }

    #[test]
    fn largest_powers() {
        assert_eq!(largest_power_below(2, 2), 1);
        assert_eq!(largest_power_below(2, 5), 4);
        assert_eq!(largest_power_below(3, 4), 3);
        assert_eq!(largest_power_below(3, 10), 9);
    }
}
