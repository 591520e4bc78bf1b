//! The functional λ = λ′ − λ″ on 𝔲_{6r+1}(q) and its quasi-monomial part λ′.

use crate::algebra::Algebra;
use crate::duals::Functional;
use crate::error::{Error, Result};
use crate::scalars::{Fe, Field};

/// Positions of σ(n; i, j) = Σ_{k=1}^{n} e*_{i+k, j+k}.
pub fn sigma(n: usize, i: usize, j: usize) -> Vec<(usize, usize)> {
    (1..=n).map(|k| (i + k, j + k)).collect()
}

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidInput(format!("r must be at least 2, got {r}")));
    }
    Ok(())
}

fn check_size(algebra: &Algebra, r: usize) -> Result<()> {
    check_r(r)?;
    if algebra.n() < 6 * r + 1 || algebra.dim() != algebra.n() * (algebra.n() - 1) / 2 {
        return Err(Error::InvalidInput(format!(
            "need the full upper triangle of size at least {}",
            6 * r + 1
        )));
    }
    Ok(())
}

fn from_sigmas(algebra: &Algebra, pieces: &[(usize, usize, usize)], value: Fe) -> Result<Functional> {
    let entries: Vec<(usize, usize, Fe)> = pieces
        .iter()
        .flat_map(|&(n, i, j)| sigma(n, i, j))
        .map(|(i, j)| (i, j, value))
        .collect();
    Functional::from_entries(algebra, &entries)
}

/// λ′ = σ(r;0,2r) + σ(r;r,4r+1) + σ(r;3r+1,5r+1) + σ(r+1;2r,3r).
pub fn lambda_prime_in(algebra: &Algebra, r: usize) -> Result<Functional> {
    check_size(algebra, r)?;
    from_sigmas(
        algebra,
        &[
            (r, 0, 2 * r),
            (r, r, 4 * r + 1),
            (r, 3 * r + 1, 5 * r + 1),
            (r + 1, 2 * r, 3 * r),
        ],
        Fe::ONE,
    )
}

/// λ″ = σ(r;0,r) + σ(r;r,3r+1).
pub fn lambda_double_prime_in(algebra: &Algebra, r: usize) -> Result<Functional> {
    check_size(algebra, r)?;
    from_sigmas(algebra, &[(r, 0, r), (r, r, 3 * r + 1)], Fe::ONE)
}

/// λ = λ′ − λ″, placed in the top-left corner of a possibly larger 𝔲_n(q).
pub fn build_lambda_in(algebra: &Algebra, r: usize) -> Result<Functional> {
    Ok(lambda_prime_in(algebra, r)?.sub(&lambda_double_prime_in(algebra, r)?))
}

pub fn build_lambda(r: usize, field: &Field) -> Result<Functional> {
    check_r(r)?;
    build_lambda_in(&Algebra::full(6 * r + 1, field.clone()), r)
}

pub fn build_lambda_prime(r: usize, field: &Field) -> Result<Functional> {
    check_r(r)?;
    lambda_prime_in(&Algebra::full(6 * r + 1, field.clone()), r)
}

pub fn lambda_double_prime(r: usize, field: &Field) -> Result<Functional> {
    check_r(r)?;
    lambda_double_prime_in(&Algebra::full(6 * r + 1, field.clone()), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duals::is_quasi_monomial;

    /// λ_{jk} read clause by clause from the piecewise description.
    fn piecewise(r: usize, j: usize, k: usize) -> i64 {
        let inr = |x: usize, lo: usize, hi: usize| lo <= x && x <= hi;
        if k == j + r && inr(j, 1, r) {
            -1
        } else if k == j + 2 * r && inr(j, 1, r) {
            1
        } else if k == j + 2 * r + 1 && inr(j, r + 1, 2 * r) {
            -1
        } else if k == j + 3 * r + 1 && inr(j, r + 1, 2 * r) {
            1
        } else if k == j + r && inr(j, 2 * r + 1, 3 * r + 1) {
            1
        } else if k == j + 2 * r && inr(j, 3 * r + 2, 4 * r + 1) {
            1
        } else {
            0
        }
    }

    #[test]
    fn matches_piecewise_formula() {
        for q in [2u64, 3, 5] {
            let f = Field::from_order(q).unwrap();
            for r in 2..=5 {
                let l = build_lambda(r, &f).unwrap();
                let n = 6 * r + 1;
                let mut count = 0;
                for j in 1..=n {
                    for k in j + 1..=n {
                        let want = f.from_int(piecewise(r, j, k));
                        assert_eq!(l.get(j, k), want, "r={r} q={q} ({j},{k})");
                        if !want.is_zero() {
                            count += 1;
                        }
                    }
                }
                // in characteristic two both signs are nonzero
                assert_eq!(count, 6 * r + 1);
                assert_eq!(l.entries().len(), 6 * r + 1);
            }
        }
    }

    #[test]
    fn r2_entries() {
        let f = Field::from_order(3).unwrap();
        let l = build_lambda(2, &f).unwrap();
        let m1 = f.from_int(-1);
        let expect = [
            ((1, 3), m1),
            ((1, 5), Fe::ONE),
            ((2, 4), m1),
            ((2, 6), Fe::ONE),
            ((3, 8), m1),
            ((3, 10), Fe::ONE),
            ((4, 9), m1),
            ((4, 11), Fe::ONE),
            ((5, 7), Fe::ONE),
            ((6, 8), Fe::ONE),
            ((7, 9), Fe::ONE),
            ((8, 12), Fe::ONE),
            ((9, 13), Fe::ONE),
        ];
        assert_eq!(l.entries(), expect.to_vec());
    }

    #[test]
    fn prime_part_is_quasi_monomial() {
        let f = Field::from_order(2).unwrap();
        for r in 2..=6 {
            assert!(is_quasi_monomial(&build_lambda_prime(r, &f).unwrap()));
            assert!(!is_quasi_monomial(&build_lambda(r, &f).unwrap()));
        }
        assert!(build_lambda(1, &f).is_err());
    }
}
