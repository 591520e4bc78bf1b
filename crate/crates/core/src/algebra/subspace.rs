//! Subspaces of an algebra in reduced row echelon form over its position
//! coordinates.

use std::fmt;

use crate::algebra::linalg::{self, Row};
use crate::scalars::{Fe, Field};

/// Equal subspaces have identical bases, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}, pivots {:?})", self.dim(), self.ambient, self.pivots)
    }
}

impl Subspace {
    pub fn span(field: &Field, ambient: usize, vectors: impl IntoIterator<Item = Row>) -> Subspace {
        let mut rows: Vec<Row> = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        let pivots = linalg::rref(field, &mut rows);
        Subspace {
            field: field.clone(),
            ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, Vec::new())
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::coordinate(field, ambient, 0..ambient)
    }

    /// Span of the given coordinate vectors.
    pub fn coordinate(field: &Field, ambient: usize, coords: impl IntoIterator<Item = usize>) -> Subspace {
        let vecs = coords.into_iter().map(|c| {
            let mut v = vec![Fe::ZERO; ambient];
            v[c] = Fe::ONE;
            v
        });
        Subspace::span(field, ambient, vecs)
    }

    /// {x : x_c = 0 for c in `zero`, x_a = x_b for (a, b) in `equal`}.
    pub fn from_constraints(field: &Field, ambient: usize, zero: &[usize], equal: &[(usize, usize)]) -> Subspace {
        let mut parent: Vec<usize> = (0..ambient).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in equal {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut killed = vec![false; ambient];
        for &c in zero {
            let r = find(&mut parent, c);
            killed[r] = true;
        }
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); ambient];
        for c in 0..ambient {
            let r = find(&mut parent, c);
            classes[r].push(c);
        }
        let vecs = classes
            .into_iter()
            .enumerate()
            .filter(|(r, cls)| !cls.is_empty() && !killed[*r])
            .map(|(_, cls)| {
                let mut v = vec![Fe::ZERO; ambient];
                for c in cls {
                    v[c] = Fe::ONE;
                }
                v
            });
        Subspace::span(field, ambient, vecs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Row] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        let c: Vec<Fe> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut residual = v.to_vec();
        let f = &self.field;
        for (row, &ci) in self.rows.iter().zip(&c) {
            linalg::axpy(f, &mut residual, f.neg(ci), row);
        }
        residual.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        self.coords(v).is_some()
    }

    /// Σ c_k b_k for basis vectors b_k.
    pub fn combine(&self, c: &[Fe]) -> Row {
        let mut v = vec![Fe::ZERO; self.ambient];
        for (row, &ci) in self.rows.iter().zip(c) {
            linalg::axpy(&self.field, &mut v, ci, row);
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&self.field, self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = a·A = b·B, solve [A; −B]ᵀ-style via the nullspace of the stacked transpose
        let k = self.dim();
        let l = other.dim();
        let f = &self.field;
        let cols: Vec<Row> = (0..self.ambient)
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c])
                    .chain(other.rows.iter().map(|r| f.neg(r[c])))
                    .collect()
            })
            .collect();
        let ns = linalg::nullspace(f, &cols, k + l);
        Subspace::span(f, self.ambient, ns.into_iter().map(|sol| self.combine(&sol[..k])))
    }

    /// Coordinates (sorted) set to zero on every vector of the subspace.
    pub fn zero_coordinates(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|&c| self.rows.iter().all(|r| r[c].is_zero()))
            .collect()
    }

    /// Number of elements q^dim, if it fits.
    pub fn order(&self) -> Option<u128> {
        (self.field.q() as u128).checked_pow(self.dim() as u32)
    }
}
