//! The alternating kernel chain 0 = 𝔩⁰ ⊆ 𝔩¹ ⊆ … ⊆ 𝔰¹ ⊆ 𝔰⁰ = 𝔫 of the
//! form B_λ(X, Y) = λ(XY), and its combinatorial shortcut for
//! quasi-monomial functionals on pattern algebras.

use serde::Serialize;

use crate::algebra::ideal::{ideal_check, is_subalgebra};
use crate::algebra::linalg::{self, Row};
use crate::algebra::Subspace;
use crate::duals::{is_quasi_monomial, Functional};
use crate::error::{Error, Result};

/// {X ∈ s : λ(XY) = 0 for all Y ∈ t}.
pub fn left_kernel(lambda: &Functional, s: &Subspace, t: &Subspace) -> Subspace {
    let a = lambda.algebra();
    let f = a.field();
    let partners: Vec<Row> = t
        .basis()
        .iter()
        .map(|y| lambda.right_partner(&a.from_coords(y)))
        .collect();
    // one equation per basis vector of t, unknowns are coordinates over s
    let system: Vec<Row> = partners
        .iter()
        .map(|w| s.basis().iter().map(|x| linalg::dot(f, x, w)).collect())
        .collect();
    let sols = linalg::nullspace(f, &system, s.dim());
    Subspace::span(f, a.dim(), sols.iter().map(|c| s.combine(c)))
}

#[derive(Clone, Debug)]
pub struct ChainResult {
    /// 𝔩⁰, …, 𝔩^d
    pub l_list: Vec<Subspace>,
    /// 𝔰⁰, …, 𝔰^d
    pub s_list: Vec<Subspace>,
    pub d: usize,
    pub base_dim: usize,
}

impl ChainResult {
    pub fn l_bar(&self) -> &Subspace {
        &self.l_list[self.d]
    }

    pub fn s_bar(&self) -> &Subspace {
        &self.s_list[self.d]
    }

    pub fn l1(&self) -> &Subspace {
        &self.l_list[1]
    }

    pub fn s1(&self) -> &Subspace {
        &self.s_list[1]
    }

    /// ξ_λ(1) = q^{dim 𝔫 − dim 𝔩̄}.
    pub fn xi_degree_exponent(&self) -> usize {
        self.base_dim - self.l_bar().dim()
    }

    /// ⟨ξ_λ, ξ_λ⟩ = q^{dim 𝔰̄ − dim 𝔩̄}.
    pub fn xi_norm_exponent(&self) -> usize {
        self.s_bar().dim() - self.l_bar().dim()
    }

    /// χ_λ(1) = q^{dim 𝔫 − dim 𝔩¹}.
    pub fn superchar_degree_exponent(&self) -> usize {
        self.base_dim - self.l1().dim()
    }

    /// ⟨χ_λ, χ_λ⟩ = q^{dim 𝔰¹ − dim 𝔩¹}.
    pub fn superchar_norm_exponent(&self) -> usize {
        self.s1().dim() - self.l1().dim()
    }

    /// ξ_λ is irreducible exactly when 𝔩̄ = 𝔰̄.
    pub fn is_irreducible(&self) -> bool {
        self.l_bar() == self.s_bar()
    }
}

/// Runs the chain starting from 𝔰⁰ = `base`, a subalgebra of the algebra.
pub fn chain_compute_in(lambda: &Functional, base: &Subspace) -> ChainResult {
    let a = lambda.algebra();
    let mut l_list = vec![Subspace::zero(a.field(), a.dim())];
    let mut s_list = vec![base.clone()];
    let mut d = 0;
    for i in 0..=base.dim() {
        let s = &s_list[i];
        let l_next = left_kernel(lambda, s, s);
        let s_next = left_kernel(lambda, s, &l_next);
        let stable = s_next == *s;
        l_list.push(l_next);
        s_list.push(s_next);
        if stable {
            d = i + 1;
            break;
        }
    }
    assert!(d >= 1, "chain failed to stabilise within dim + 1 steps");
    ChainResult {
        l_list,
        s_list,
        d,
        base_dim: base.dim(),
    }
}

pub fn chain_compute(lambda: &Functional) -> ChainResult {
    let a = lambda.algebra();
    chain_compute_in(lambda, &Subspace::full(a.field(), a.dim()))
}

/// Violations of the containment, subalgebra and ideal properties of a chain.
pub fn chain_violations(lambda: &Functional, chain: &ChainResult) -> Vec<String> {
    let algebra = lambda.algebra();
    let mut out = Vec::new();
    let d = chain.d;
    for i in 0..d {
        if !chain.l_list[i].is_subspace_of(&chain.l_list[i + 1]) {
            out.push(format!("l^{i} not inside l^{}", i + 1));
        }
        if !chain.s_list[i + 1].is_subspace_of(&chain.s_list[i]) {
            out.push(format!("s^{} not inside s^{i}", i + 1));
        }
        if !is_subalgebra(algebra, &chain.s_list[i + 1]) {
            out.push(format!("s^{} is not a subalgebra", i + 1));
        }
        match ideal_check(algebra, &chain.l_list[i + 1], &chain.s_list[i]) {
            Ok(r) if r.right_ideal => {}
            _ => out.push(format!("l^{} is not a right ideal of s^{i}", i + 1)),
        }
        match ideal_check(algebra, &chain.l_list[i + 1], &chain.s_list[i + 1]) {
            Ok(r) if r.is_two_sided() => {}
            _ => out.push(format!("l^{} is not a two-sided ideal of s^{}", i + 1, i + 1)),
        }
    }
    if !chain.l_list[d].is_subspace_of(&chain.s_list[d]) {
        out.push("l^d not inside s^d".into());
    }
    // one more step must reproduce the terminal pair
    let s = chain.s_bar();
    let l_more = left_kernel(lambda, s, s);
    let s_more = left_kernel(lambda, s, &l_more);
    if l_more != *chain.l_bar() || s_more != *s {
        out.push("chain does not stay constant after d".into());
    }
    out
}

/// Positions ⊥L_λ and ⊥S_λ of a quasi-monomial functional, with the
/// subspaces they cut out.
#[derive(Clone, Debug)]
pub struct QuasiMonomialKernels {
    pub perp_l: Vec<(usize, usize)>,
    pub perp_s: Vec<(usize, usize)>,
    pub l1: Subspace,
    pub s1: Subspace,
}

impl QuasiMonomialKernels {
    /// μ ∈ λG, using λG = λ + span{e*_{ij} : (i, j) ∈ ⊥L_λ}.
    pub fn right_orbit_contains(&self, lambda: &Functional, mu: &Functional) -> bool {
        let diff = mu.sub(lambda);
        diff.entries().iter().all(|(p, _)| self.perp_l.contains(p))
    }

    /// |λG| = q^{|⊥L_λ|}.
    pub fn right_orbit_exponent(&self) -> usize {
        self.perp_l.len()
    }
}

pub fn quasimonomial_kernels(lambda: &Functional) -> Result<QuasiMonomialKernels> {
    if !is_quasi_monomial(lambda) {
        return Err(Error::NotQuasiMonomial);
    }
    let a = lambda.algebra();
    let p = a.pattern();
    let n = a.n();
    // the unique k with λ_{ik} ≠ 0, per row
    let mut row_target = vec![None; n + 1];
    for ((i, k), _) in lambda.entries() {
        row_target[i] = Some(k);
    }
    let in_perp_l = |i: usize, j: usize| -> bool {
        p.contains(i, j) && row_target[i].is_some_and(|k| p.contains(j, k))
    };
    let perp_l: Vec<(usize, usize)> = a.positions().iter().copied().filter(|&(i, j)| in_perp_l(i, j)).collect();
    let perp_s: Vec<(usize, usize)> = perp_l
        .iter()
        .copied()
        .filter(|&(i, j)| {
            let k = row_target[i].unwrap();
            !in_perp_l(j, k)
        })
        .collect();
    let zero_on = |set: &[(usize, usize)]| {
        let zero: Vec<usize> = set.iter().map(|&(i, j)| a.index(i, j).unwrap()).collect();
        Subspace::from_constraints(a.field(), a.dim(), &zero, &[])
    };
    Ok(QuasiMonomialKernels {
        l1: zero_on(&perp_l),
        s1: zero_on(&perp_s),
        perp_l,
        perp_s,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibilityReport {
    pub quasi_monomial: bool,
    pub l_bar_equals_s_bar: bool,
    pub d: usize,
    pub l_bar_dim: usize,
    pub s_bar_dim: usize,
}

/// Runs the chain for a quasi-monomial λ and reports whether 𝔩̄ = 𝔰̄, the
/// condition for ξ_λ = ψ_λ to be irreducible.
pub fn quasimonomial_irreducibility_check(lambda: &Functional) -> IrreducibilityReport {
    let c = chain_compute(lambda);
    IrreducibilityReport {
        quasi_monomial: is_quasi_monomial(lambda),
        l_bar_equals_s_bar: c.is_irreducible(),
        d: c.d,
        l_bar_dim: c.l_bar().dim(),
        s_bar_dim: c.s_bar().dim(),
    }
}
