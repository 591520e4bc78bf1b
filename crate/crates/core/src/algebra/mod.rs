//! Pattern algebras, algebra groups, subspaces and quotients.

pub mod group;
pub mod ideal;
pub mod linalg;
pub mod matrix;
pub mod pattern;
pub mod subspace;

pub use group::{AlgebraGroup, DEFAULT_CAP};
pub use ideal::{ideal_check, is_subalgebra, Decomposition, IdealKind, IdealReport};
pub use matrix::{Algebra, GroupElement, NilMatrix};
pub use pattern::Pattern;
pub use subspace::Subspace;

use crate::scalars::{Fe, Field};

/// 𝔞_n(q) = {X ∈ 𝔲_n(q) : X_{i+1,j+1} = X_{i,j}} as a subalgebra of 𝔲_n(q).
pub fn toeplitz(n: usize, field: &Field) -> (Algebra, Subspace) {
    let alg = Algebra::full(n, field.clone());
    let basis = (1..n).map(|d| {
        let mut v = vec![Fe::ZERO; alg.dim()];
        for i in 1..=n - d {
            v[alg.index(i, i + d).unwrap()] = Fe::ONE;
        }
        v
    });
    let sub = Subspace::span(field, alg.dim(), basis);
    (alg, sub)
}
