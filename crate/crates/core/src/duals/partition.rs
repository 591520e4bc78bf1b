//! Quasi-monomial functionals, their shapes, and the diagonal torus action.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::duals::functional::Functional;
use crate::error::{Error, Result};
use crate::scalars::{Fe, Field};

/// A set partition of [n]: parts sorted internally and by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetPartition {
    n: usize,
    parts: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<SetPartition> {
        let mut parts: Vec<Vec<usize>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        let mut seen = vec![false; n + 1];
        for p in &parts {
            if p.is_empty() {
                return Err(Error::InvalidInput("empty part".into()));
            }
            for &x in p {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidInput(format!("{x} is out of range or repeated")));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidInput("parts do not cover [n]".into()));
        }
        parts.sort();
        Ok(SetPartition { n, parts })
    }

    /// Finest partition with i, j together for every arc (i, j).
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> SetPartition {
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (i, j) in arcs {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for x in 1..=n {
            let r = find(&mut parent, x);
            parts[r].push(x);
        }
        SetPartition::new(n, parts.into_iter().filter(|p| !p.is_empty()).collect()).expect("components partition [n]")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The same partition of [m] for m ≥ n, with new singletons.
    pub fn padded(&self, m: usize) -> SetPartition {
        let mut parts = self.parts.clone();
        parts.extend((self.n + 1..=m).map(|x| vec![x]));
        SetPartition::new(m.max(self.n), parts).expect("padding keeps a partition")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| format!("{{{}}}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// At most one nonzero value in each row and each column.
pub fn is_quasi_monomial(lambda: &Functional) -> bool {
    let n = lambda.algebra().n();
    let mut rows = vec![false; n + 1];
    let mut cols = vec![false; n + 1];
    for ((i, j), _) in lambda.entries() {
        if rows[i] || cols[j] {
            return false;
        }
        rows[i] = true;
        cols[j] = true;
    }
    true
}

pub fn shape(lambda: &Functional) -> Result<SetPartition> {
    if !is_quasi_monomial(lambda) {
        return Err(Error::NotQuasiMonomial);
    }
    let n = lambda.algebra().n();
    Ok(SetPartition::from_arcs(n, lambda.entries().into_iter().map(|(p, _)| p)))
}

/// ν_{ij} = (D_ii / D_jj) λ_{ij}.
pub fn torus_act(diag: &[Fe], lambda: &Functional) -> Result<Functional> {
    let a = lambda.algebra();
    let f = a.field();
    if diag.len() != a.n() {
        return Err(Error::Mismatch(format!("{} diagonal entries for size {}", diag.len(), a.n())));
    }
    let inv: Vec<Fe> = diag
        .iter()
        .map(|&d| f.inv(d).ok_or_else(|| Error::InvalidInput("zero diagonal entry".into())))
        .collect::<Result<_>>()?;
    let coeffs = a
        .positions()
        .iter()
        .zip(lambda.coeffs())
        .map(|(&(i, j), &c)| f.mul(c, f.mul(diag[i - 1], inv[j - 1])))
        .collect();
    Functional::from_coeffs(a, coeffs)
}

/// A generator of F_q^×.
pub fn primitive_element(f: &Field) -> Fe {
    let q = f.q() as u64;
    if q == 2 {
        return Fe::ONE;
    }
    f.elements()
        .skip(1)
        .find(|&a| (1..q - 1).all(|k| f.pow(a, k) != Fe::ONE))
        .expect("F_q^× is cyclic")
}

/// Orbit of λ under the diagonal torus, by closure under diag(1,…,ω,…,1).
pub fn torus_orbit(lambda: &Functional, cap: u64) -> Result<Vec<Functional>> {
    let a = lambda.algebra();
    let n = a.n();
    let w = primitive_element(a.field());
    let gens: Vec<Vec<Fe>> = (0..n)
        .map(|k| (0..n).map(|i| if i == k { w } else { Fe::ONE }).collect())
        .collect();
    let mut seen: HashSet<Vec<Fe>> = HashSet::from([lambda.coeffs().to_vec()]);
    let mut out = vec![lambda.clone()];
    let mut frontier = vec![lambda.clone()];
    while let Some(l) = frontier.pop() {
        for d in &gens {
            let m = torus_act(d, &l)?;
            if seen.insert(m.coeffs().to_vec()) {
                if seen.len() as u64 > cap {
                    return Err(Error::CapExceeded {
                        what: "torus orbit",
                        needed: seen.len() as u128,
                        cap,
                    });
                }
                out.push(m.clone());
                frontier.push(m);
            }
        }
    }
    out.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
    Ok(out)
}

/// Number of quasi-monomial functionals on the pattern with the given shape.
/// Each part {a_1 < … < a_k} must be joined by the chain of arcs
/// (a_1,a_2), …, (a_{k−1},a_k), each carrying a nonzero value.
pub fn quasi_monomial_count_with_shape(algebra: &Algebra, shape: &SetPartition) -> u128 {
    let q1 = algebra.field().q() as u128 - 1;
    let mut count = 1u128;
    for part in shape.parts() {
        for w in part.windows(2) {
            if !algebra.pattern().contains(w[0], w[1]) {
                return 0;
            }
            count *= q1;
        }
    }
    count
}

/// Every quasi-monomial functional on the algebra, in a fixed order.
pub fn quasi_monomials(algebra: &Algebra) -> Vec<Functional> {
    let positions = algebra.positions().to_vec();
    let q = algebra.field().q() as u16;
    let n = algebra.n();
    let mut out = Vec::new();
    let mut current = vec![Fe::ZERO; algebra.dim()];
    let mut rows = vec![false; n + 1];
    let mut cols = vec![false; n + 1];
    fn rec(
        k: usize,
        positions: &[(usize, usize)],
        q: u16,
        current: &mut Vec<Fe>,
        rows: &mut [bool],
        cols: &mut [bool],
        algebra: &Algebra,
        out: &mut Vec<Functional>,
    ) {
        if k == positions.len() {
            out.push(Functional::from_coeffs(algebra, current.clone()).unwrap());
            return;
        }
        rec(k + 1, positions, q, current, rows, cols, algebra, out);
        let (i, j) = positions[k];
        if rows[i] || cols[j] {
            return;
        }
        rows[i] = true;
        cols[j] = true;
        for c in 1..q {
            current[k] = Fe(c);
            rec(k + 1, positions, q, current, rows, cols, algebra, out);
        }
        current[k] = Fe::ZERO;
        rows[i] = false;
        cols[j] = false;
    }
    rec(0, &positions, q, &mut current, &mut rows, &mut cols, algebra, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn shape_examples() {
        let f = Field::from_order(3).unwrap();
        let a = Algebra::full(6, f.clone());
        let l = Functional::from_entries(&a, &[(1, 3, Fe(1)), (2, 4, Fe(2)), (3, 5, Fe(1))]).unwrap();
        assert_eq!(shape(&l).unwrap().to_string(), "{{1,3,5},{2,4},{6}}");
        assert_eq!(shape(&Functional::zero(&a)).unwrap().len(), 6);
        let bad = Functional::from_entries(&a, &[(1, 2, Fe(1)), (1, 3, Fe(1))]).unwrap();
        assert_eq!(shape(&bad).unwrap_err(), Error::NotQuasiMonomial);
    }

    #[test]
    fn torus_examples() {
        let f = Field::from_order(3).unwrap();
        let a = Algebra::full(3, f.clone());
        let l = Functional::dual_unit(&a, 1, 3).unwrap();
        assert_eq!(torus_act(&[Fe(1), Fe(1), Fe(1)], &l).unwrap(), l);
        let nu = torus_act(&[Fe(2), Fe(1), Fe(1)], &l).unwrap();
        assert_eq!(nu, Functional::from_entries(&a, &[(1, 3, Fe(2))]).unwrap());
        assert!(torus_act(&[Fe(0), Fe(1), Fe(1)], &l).is_err());
    }

    #[test]
    fn counts_by_shape_match_enumeration() {
        for (n, q) in [(4usize, 2u64), (4, 3), (5, 3)] {
            let a = Algebra::full(n, Field::from_order(q).unwrap());
            let mut counts: HashMap<SetPartition, u128> = HashMap::new();
            for l in quasi_monomials(&a) {
                *counts.entry(shape(&l).unwrap()).or_default() += 1;
            }
            for (s, c) in &counts {
                assert_eq!(quasi_monomial_count_with_shape(&a, s), *c);
                assert_eq!(*c, (q as u128 - 1).pow((n - s.len()) as u32));
            }
        }
    }

    #[test]
    fn primitive_elements() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let f = Field::from_order(q).unwrap();
            let w = primitive_element(&f);
            let order = (1..q).find(|&k| f.pow(w, k) == Fe::ONE).unwrap();
            assert_eq!(order, q - 1);
        }
    }
}
