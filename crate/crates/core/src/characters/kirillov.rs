//! θ_λ, Kirillov functions ψ_λ and ψ^Exp_λ, supercharacters χ_λ and the
//! characters ξ_λ = Ind_{L̄_λ}^G(θ_λ).

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{AlgebraGroup, GroupElement};
use crate::chain::{chain_compute_in, ChainResult};
use crate::characters::table::ClassFunction;
use crate::duals::orbit::{closure, GeneratorSet};
use crate::duals::{orbit, power_exponent, Functional, OrbitKind};
use crate::error::{Error, Result};
use crate::scalars::{Cyclo, Fe};

fn check_group(group: &AlgebraGroup, lambda: &Functional) -> Result<()> {
    if lambda.algebra() != group.algebra() {
        return Err(Error::Mismatch("functional and group live in different algebras".into()));
    }
    Ok(())
}

/// Σ_{μ ∈ set} θ_μ scaled by `scale`, as a table on the group.
pub fn theta_sum(group: &AlgebraGroup, set: &[Functional], scale: &BigRational) -> Result<ClassFunction> {
    let a = group.algebra();
    let f = a.field();
    let p = f.p();
    ClassFunction::from_fn(group, |g| {
        let x = a.coords(g.body());
        let mut counts = vec![0i64; p as usize];
        for mu in set {
            counts[f.trace(mu.eval_coords(&x)) as usize] += 1;
        }
        Cyclo::from_exponent_counts(p, &counts).scale(scale)
    })
}

/// θ_λ(g) = θ(λ(g − 1)).
pub fn theta_lambda(group: &AlgebraGroup, lambda: &Functional) -> Result<ClassFunction> {
    check_group(group, lambda)?;
    let f = group.algebra().field().clone();
    ClassFunction::from_fn(group, |g| f.theta(lambda.eval(g.body())))
}

/// ψ_λ = |λ^G|^{-1/2} Σ_{μ ∈ λ^G} θ_μ.
pub fn kirillov(group: &AlgebraGroup, lambda: &Functional) -> Result<ClassFunction> {
    check_group(group, lambda)?;
    let orb = orbit(group, lambda, OrbitKind::Coadjoint)?;
    let q = group.algebra().field().q() as u128;
    let e = power_exponent(orb.len() as u128, q).expect("orbit sizes are checked to be powers of q");
    let root = BigInt::from(q).pow(e / 2);
    theta_sum(group, &orb, &BigRational::new(1.into(), root))
}

/// ψ^Exp_λ(Exp(X)) = ψ_λ(1 + X).
pub fn exp_kirillov(group: &AlgebraGroup, lambda: &Functional) -> Result<ClassFunction> {
    let psi = kirillov(group, lambda)?;
    let a = group.algebra();
    ClassFunction::from_fn(group, |g| {
        let log = a.trunc_log(g);
        psi.value(&GroupElement::from_body(log)).clone()
    })
}

/// χ_λ = |Gλ| / |GλG| Σ_{μ ∈ GλG} θ_μ.
pub fn supercharacter(group: &AlgebraGroup, lambda: &Functional) -> Result<ClassFunction> {
    check_group(group, lambda)?;
    let left = orbit(group, lambda, OrbitKind::Left)?;
    let two = orbit(group, lambda, OrbitKind::TwoSided)?;
    let scale = BigRational::new(BigInt::from(left.len()), BigInt::from(two.len()));
    theta_sum(group, &two, &scale)
}

/// Ξ_λ = {gλsg⁻¹ : g ∈ G, s ∈ S̄_λ} as a sorted list.
pub fn xi_set(group: &AlgebraGroup, lambda: &Functional, chain: &ChainResult) -> Result<Vec<Functional>> {
    check_group(group, lambda)?;
    let s_bar = group.subgroup(chain.s_bar().clone())?;
    let s_gens = GeneratorSet::of(&s_bar);
    let right = closure(group, vec![lambda.clone()], "right orbit under S̄", |l| {
        s_gens.invs.iter().map(|si| l.act_right_by_inverse(si)).collect()
    })?;
    let g_gens = GeneratorSet::of(group);
    closure(group, right, "Ξ_λ", |l| {
        g_gens
            .gens
            .iter()
            .zip(&g_gens.invs)
            .map(|(g, gi)| l.act_coadjoint_pair(g, gi))
            .collect()
    })
}

/// Exact bookkeeping for ξ_λ read off the chain, in powers of q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XiReport {
    pub d: usize,
    pub l_bar_dim: usize,
    pub s_bar_dim: usize,
    /// ξ_λ(1) = q^degree_exponent
    pub degree_exponent: usize,
    /// ⟨ξ_λ, ξ_λ⟩ = q^norm_exponent
    pub norm_exponent: usize,
    /// |Ξ_λ| = q^orbit_exponent
    pub orbit_exponent: usize,
    pub irreducible: bool,
    /// χ_λ(1) = q^superchar_degree_exponent
    pub superchar_degree_exponent: usize,
    pub superchar_norm_exponent: usize,
}

impl XiReport {
    pub fn from_chain(c: &ChainResult) -> XiReport {
        let g = c.base_dim;
        XiReport {
            d: c.d,
            l_bar_dim: c.l_bar().dim(),
            s_bar_dim: c.s_bar().dim(),
            degree_exponent: c.xi_degree_exponent(),
            norm_exponent: c.xi_norm_exponent(),
            orbit_exponent: 2 * g - c.l_bar().dim() - c.s_bar().dim(),
            irreducible: c.is_irreducible(),
            superchar_degree_exponent: c.superchar_degree_exponent(),
            superchar_norm_exponent: c.superchar_norm_exponent(),
        }
    }
}

/// ξ_λ both as Ind_{L̄}^G(θ_λ) and as (|S̄|/|G|) Σ_{ν ∈ Ξ_λ} θ_ν.
#[derive(Clone, Debug)]
pub struct XiTables {
    pub report: XiReport,
    pub induced: ClassFunction,
    pub orbit_sum: ClassFunction,
    pub xi_size: usize,
}

pub fn xi(group: &AlgebraGroup, lambda: &Functional) -> Result<(XiReport, Option<XiTables>)> {
    check_group(group, lambda)?;
    let chain = chain_compute_in(lambda, group.lie());
    let report = XiReport::from_chain(&chain);
    match xi_tables(group, lambda, &chain, report.clone()) {
        Ok(t) => Ok((report, Some(t))),
        Err(Error::CapExceeded { .. }) => Ok((report, None)),
        Err(e) => Err(e),
    }
}

fn xi_tables(group: &AlgebraGroup, lambda: &Functional, chain: &ChainResult, report: XiReport) -> Result<XiTables> {
    group.checked_size("ξ value table")?;
    let l_bar = group.subgroup(chain.l_bar().clone())?;
    let theta = theta_lambda(&l_bar, lambda)?;
    let induced = theta.induce(group)?;
    let set = xi_set(group, lambda, chain)?;
    let q = BigInt::from(group.algebra().field().q());
    let scale = BigRational::new(q.pow(chain.s_bar().dim() as u32), q.pow(group.dim() as u32));
    let orbit_sum = theta_sum(group, &set, &scale)?;
    Ok(XiTables {
        report,
        induced,
        orbit_sum,
        xi_size: set.len(),
    })
}

/// Whether θ_λ restricts to a linear character of the subgroup, which
/// happens exactly when λ(XY) = 0 for X, Y in its algebra.
pub fn theta_is_linear_on(sub: &AlgebraGroup, lambda: &Functional) -> bool {
    let a = sub.algebra();
    let mats: Vec<_> = sub.lie().basis().iter().map(|b| a.from_coords(b)).collect();
    mats.iter()
        .all(|x| mats.iter().all(|y| lambda.eval(&a.mat_mul(x, y)) == Fe::ZERO))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, NilMatrix};
    use crate::scalars::Field;

    fn ut(n: usize, q: u64) -> AlgebraGroup {
        AlgebraGroup::full(&Algebra::full(n, Field::from_order(q).unwrap()))
    }

    #[test]
    fn theta_examples() {
        let g = ut(2, 2);
        let a = g.algebra().clone();
        let t0 = theta_lambda(&g, &Functional::zero(&a)).unwrap();
        assert!(t0.values().iter().all(|v| *v == Cyclo::one(1)));
        let t = theta_lambda(&g, &Functional::dual_unit(&a, 1, 2).unwrap()).unwrap();
        let x = GroupElement::from_body(NilMatrix::unit(2, 1, 2, Fe::ONE));
        assert_eq!(t.value(&x), &Cyclo::from_int(1, -1));
    }

    #[test]
    fn kirillov_corner_of_ut3() {
        let g = ut(3, 2);
        let a = g.algebra().clone();
        let psi = kirillov(&g, &Functional::dual_unit(&a, 1, 3).unwrap()).unwrap();
        for (k, v) in psi.values().iter().enumerate() {
            let x = g.element(k);
            let expect = if x.is_identity() {
                2
            } else if x.body() == &NilMatrix::unit(3, 1, 3, Fe::ONE) {
                -2
            } else {
                0
            };
            assert_eq!(*v, Cyclo::from_int(1, expect), "{x:?}");
        }
    }

    #[test]
    fn xi_routes_agree_on_ut4() {
        let g = ut(4, 2);
        let a = g.algebra().clone();
        for idx in (0..64u32).step_by(5) {
            let c: Vec<Fe> = (0..6).map(|b| Fe(((idx >> b) & 1) as u16)).collect();
            let l = Functional::from_coeffs(&a, c).unwrap();
            let (rep, tables) = xi(&g, &l).unwrap();
            let t = tables.unwrap();
            assert_eq!(t.induced, t.orbit_sum);
            assert_eq!(t.xi_size as u128, 2u128.pow(rep.orbit_exponent as u32));
            let deg = Cyclo::from_int(1, 1 << rep.degree_exponent);
            assert_eq!(t.induced.degree(), &deg);
            let norm = t.induced.inner_product(&t.induced).unwrap();
            assert_eq!(norm, Cyclo::from_int(1, 1 << rep.norm_exponent));
        }
    }

    #[test]
    fn exp_kirillov_equals_kirillov_in_char_two() {
        let g = ut(4, 2);
        let a = g.algebra().clone();
        for idx in (0..64u32).step_by(7) {
            let c: Vec<Fe> = (0..6).map(|b| Fe(((idx >> b) & 1) as u16)).collect();
            let l = Functional::from_coeffs(&a, c).unwrap();
            assert_eq!(kirillov(&g, &l).unwrap(), exp_kirillov(&g, &l).unwrap());
        }
    }
}
