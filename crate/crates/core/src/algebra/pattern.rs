//! Closed position sets P ⊆ {(i, j) : 1 ≤ i < j ≤ n}.

use rand::Rng;

use crate::error::{Error, Result};

/// Positions sorted row-major, with an index lookup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    n: usize,
    positions: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
}

impl Pattern {
    /// Builds a pattern; positions are deduplicated and sorted. Closure is
    /// not required here, see [`Pattern::is_closed`].
    pub fn new(n: usize, positions: impl IntoIterator<Item = (usize, usize)>) -> Result<Pattern> {
        let mut pos: Vec<(usize, usize)> = positions.into_iter().collect();
        for &(i, j) in &pos {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::InvalidInput(format!(
                    "position ({i},{j}) is not strictly upper triangular in size {n}"
                )));
            }
        }
        pos.sort_unstable();
        pos.dedup();
        let mut index = vec![None; n * n];
        for (k, &(i, j)) in pos.iter().enumerate() {
            index[(i - 1) * n + (j - 1)] = Some(k);
        }
        Ok(Pattern {
            n,
            positions: pos,
            index,
        })
    }

    /// All of {(i, j) : i < j}.
    pub fn full(n: usize) -> Pattern {
        let pos = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Pattern::new(n, pos).expect("full pattern is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// Coordinate index of (i, j), 1-based.
    #[inline]
    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return None;
        }
        self.index[(i - 1) * self.n + (j - 1)]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.index(i, j).is_some()
    }

    /// (i, j), (j, k) ∈ P implies (i, k) ∈ P.
    pub fn is_closed(&self) -> bool {
        self.positions.iter().all(|&(i, j)| {
            (j + 1..=self.n).all(|k| !self.contains(j, k) || self.contains(i, k))
        })
    }

    /// Smallest closed pattern containing the given positions.
    pub fn closure(&self) -> Pattern {
        let n = self.n;
        let mut reach = vec![false; n * n];
        for &(i, j) in &self.positions {
            reach[(i - 1) * n + (j - 1)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i * n + k] {
                    for j in 0..n {
                        if reach[k * n + j] {
                            reach[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let pos = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| reach[i * n + j])
            .map(|(i, j)| (i + 1, j + 1));
        Pattern::new(n, pos).expect("closure stays upper triangular")
    }

    /// Random closed pattern: each position kept with probability `density`,
    /// then closed.
    pub fn random_closed<R: Rng>(n: usize, density: f64, rng: &mut R) -> Pattern {
        let full = Pattern::full(n);
        let pos: Vec<_> = full
            .positions
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(density))
            .collect();
        Pattern::new(n, pos).unwrap().closure()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        assert!(Pattern::full(4).is_closed());
        assert!(!Pattern::new(3, [(1, 2), (2, 3)]).unwrap().is_closed());
        assert!(Pattern::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap().is_closed());
        let c = Pattern::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap().closure();
        assert_eq!(c, Pattern::full(4));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Pattern::new(3, [(2, 2)]).is_err());
        assert!(Pattern::new(3, [(1, 4)]).is_err());
        assert!(Pattern::new(3, [(0, 1)]).is_err());
    }

    #[test]
    fn row_major_order() {
        let p = Pattern::full(3);
        assert_eq!(p.positions(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(p.index(2, 3), Some(2));
        assert_eq!(p.index(3, 2), None);
    }
}
