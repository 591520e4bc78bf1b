//! Named position sets in a (6r+1)×(6r+1) upper triangular matrix and the
//! position map τ tying them together.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

pub type Pos = (usize, usize);

/// □(n; x, y) = {(x+i, y+j) : i, j ∈ [n]}.
pub fn square(n: usize, x: usize, y: usize) -> Vec<Pos> {
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            out.push((x + i, y + j));
        }
    }
    out
}

/// Positions of □(n; x, y) strictly below its diagonal.
pub fn lower_triangle(n: usize, x: usize, y: usize) -> Vec<Pos> {
    square(n, x, y)
        .into_iter()
        .filter(|&(i, j)| i - x > j - y)
        .collect()
}

/// Positions of □(n; x, y) strictly above its diagonal.
pub fn upper_triangle(n: usize, x: usize, y: usize) -> Vec<Pos> {
    square(n, x, y)
        .into_iter()
        .filter(|&(i, j)| i - x < j - y)
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionAtlas {
    pub r: usize,
    pub n: usize,
    pub a: Vec<Pos>,
    pub b: Vec<Pos>,
    pub c: Vec<Pos>,
    pub d: Vec<Pos>,
    pub a_prime: Vec<Pos>,
    pub b_prime: Vec<Pos>,
    pub c_prime: Vec<Pos>,
    /// Z₁, …, Z₇
    pub z_parts: Vec<Vec<Pos>>,
    #[serde(skip)]
    pub tau: BTreeMap<Pos, Pos>,
}

fn sorted(mut v: Vec<Pos>) -> Vec<Pos> {
    v.sort();
    v.dedup();
    v
}

fn minus(v: Vec<Pos>, w: &[Pos]) -> Vec<Pos> {
    v.into_iter().filter(|p| !w.contains(p)).collect()
}

pub fn build_regions(r: usize) -> RegionAtlas {
    assert!(r >= 2, "regions are defined for r ≥ 2");
    let n = 6 * r + 1;
    let a = sorted(lower_triangle(r, r, 3 * r + 1));
    let b = sorted(upper_triangle(r, r, r));
    let c = sorted(lower_triangle(r, 0, r));
    let mut d = upper_triangle(r, 0, 0);
    d.extend((2..=r).map(|i| (i, 2 * r + 1)));
    let d = sorted(d);
    let a_prime = sorted(lower_triangle(r, 2 * r + 1, 3 * r + 1));
    let b_prime = sorted(upper_triangle(r, 2 * r + 1, 2 * r + 1));
    let mut c_prime = lower_triangle(r - 1, 1, 2 * r + 1);
    c_prime.extend((2..=r).map(|i| (2 * r + 1, 2 * r + i)));
    let c_prime = sorted(c_prime);

    // the extra column sits beside □(r; r, 2r), in rows r+1..2r
    let mut z1 = square(r, r, 2 * r);
    z1.extend((1..=r).map(|i| (r + i, 3 * r + 1)));
    let z_parts = vec![
        sorted(z1),
        sorted(lower_triangle(r, r, 4 * r + 1)),
        sorted(square(r, 3 * r + 1, 4 * r + 1)),
        sorted(lower_triangle(r, 3 * r + 1, 5 * r + 1)),
        sorted(minus(square(r, 0, r), &c)),
        sorted(minus(square(r, r, 3 * r + 1), &a)),
        sorted(upper_triangle(r, 3 * r + 1, 3 * r + 1)),
    ];

    let mut tau = BTreeMap::new();
    for &(i, j) in &a {
        tau.insert((i, j), (i + r + 1, j));
    }
    for &(i, j) in &b {
        tau.insert((i, j), (i + r + 1, j + r + 1));
    }
    for &(i, j) in &c {
        let img = if i < r { (i + 1, j + r + 1) } else { (2 * r + 1, j + r + 1) };
        tau.insert((i, j), img);
    }
    for &(i, j) in &d {
        let img = if j < r {
            (i + 1, j + 1)
        } else if j == r {
            (i + 1, 2 * r + 1)
        } else {
            (1, r + 2 - i)
        };
        tau.insert((i, j), img);
    }
    RegionAtlas {
        r,
        n,
        a,
        b,
        c,
        d,
        a_prime,
        b_prime,
        c_prime,
        z_parts,
        tau,
    }
}

impl RegionAtlas {
    /// Z = Z₁ ∪ Z₂ ∪ Z₃ ∪ Z₄.
    pub fn z(&self) -> Vec<Pos> {
        sorted(self.z_parts[..4].concat())
    }

    /// Z′ = Z₅ ∪ Z₆ ∪ Z₇.
    pub fn z_prime(&self) -> Vec<Pos> {
        sorted(self.z_parts[4..].concat())
    }

    pub fn tau(&self, p: Pos) -> Option<Pos> {
        self.tau.get(&p).copied()
    }

    /// Every named region with its label, in a fixed order.
    pub fn named(&self) -> Vec<(String, &[Pos])> {
        let mut out: Vec<(String, &[Pos])> = vec![
            ("A".into(), &self.a),
            ("B".into(), &self.b),
            ("C".into(), &self.c),
            ("D".into(), &self.d),
            ("A'".into(), &self.a_prime),
            ("B'".into(), &self.b_prime),
            ("C'".into(), &self.c_prime),
        ];
        for (k, z) in self.z_parts.iter().enumerate() {
            out.push((format!("Z{}", k + 1), z));
        }
        out
    }

    /// Union of every named region.
    pub fn all_lettered(&self) -> Vec<Pos> {
        sorted(self.named().into_iter().flat_map(|(_, v)| v.iter().copied()).collect())
    }

    /// Number of cycles of τ on D, or None if τ does not permute D.
    pub fn d_cycles(&self) -> Option<usize> {
        let set: BTreeSet<Pos> = self.d.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut cycles = 0;
        for &start in &self.d {
            if seen.contains(&start) {
                continue;
            }
            cycles += 1;
            let mut p = start;
            loop {
                if !seen.insert(p) {
                    return None;
                }
                p = self.tau(p)?;
                if !set.contains(&p) {
                    return None;
                }
                if p == start {
                    break;
                }
            }
        }
        Some(cycles)
    }

    /// Violated structural invariants, empty when the atlas is consistent.
    pub fn violations(&self) -> Vec<String> {
        let r = self.r;
        let mut out = Vec::new();
        let named = self.named();
        let mut owner: BTreeMap<Pos, String> = BTreeMap::new();
        for (name, set) in &named {
            for &p in *set {
                if !(1 <= p.0 && p.0 < p.1 && p.1 <= self.n) {
                    out.push(format!("{name} holds {p:?} outside the upper triangle"));
                }
                if let Some(prev) = owner.insert(p, name.clone()) {
                    out.push(format!("{p:?} lies in both {prev} and {name}"));
                }
            }
        }
        let tri = (r * r - r) / 2;
        let expect = [
            ("A", self.a.len(), tri),
            ("B", self.b.len(), tri),
            ("C", self.c.len(), tri),
            ("D", self.d.len(), (r * r + r) / 2 - 1),
            ("Z", self.z().len(), 3 * r * r),
            ("Z1", self.z_parts[0].len(), r * r + r),
            ("Z2", self.z_parts[1].len(), tri),
            ("Z3", self.z_parts[2].len(), r * r),
            ("Z4", self.z_parts[3].len(), tri),
        ];
        for (name, got, want) in expect {
            if got != want {
                out.push(format!("|{name}| = {got}, expected {want}"));
            }
        }
        let image = |src: &[Pos]| -> BTreeSet<Pos> { src.iter().filter_map(|&p| self.tau(p)).collect() };
        for (name, src, dst) in [
            ("A", &self.a, &self.a_prime),
            ("B", &self.b, &self.b_prime),
            ("C", &self.c, &self.c_prime),
            ("D", &self.d, &self.d),
        ] {
            let want: BTreeSet<Pos> = dst.iter().copied().collect();
            if image(src) != want || src.len() != dst.len() {
                out.push(format!("τ does not map {name} onto its partner"));
            }
        }
        match self.d_cycles() {
            Some(k) if k == r - 1 => {}
            other => out.push(format!("τ on D has cycle count {other:?}, expected {}", r - 1)),
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(square(2, 0, 1), vec![(1, 2), (1, 3), (2, 2), (2, 3)]);
        assert_eq!(lower_triangle(2, 2, 7), vec![(4, 8)]);
        assert_eq!(upper_triangle(3, 0, 0), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn r2_regions() {
        let at = build_regions(2);
        assert_eq!(at.a, vec![(4, 8)]);
        assert_eq!(at.tau((4, 8)), Some((7, 8)));
        assert_eq!(at.b, vec![(3, 4)]);
        assert_eq!(at.tau((3, 4)), Some((6, 7)));
        assert_eq!(at.c, vec![(2, 3)]);
        assert_eq!(at.tau((2, 3)), Some((5, 6)));
        assert_eq!(at.d, vec![(1, 2), (2, 5)]);
        assert_eq!(at.tau((1, 2)), Some((2, 5)));
        assert_eq!(at.tau((2, 5)), Some((1, 2)));
        assert_eq!(at.z().len(), 12);
        assert!(at.z_parts[0].contains(&(3, 7)) && at.z_parts[0].contains(&(4, 7)));
        assert!(at.violations().is_empty(), "{:?}", at.violations());
    }

    #[test]
    fn invariants_hold_up_to_eight() {
        for r in 2..=8 {
            let at = build_regions(r);
            assert!(at.violations().is_empty(), "r = {r}: {:?}", at.violations());
        }
    }

    #[test]
    fn tau_preserves_relative_position_on_a_b_c() {
        let at = build_regions(4);
        for set in [&at.a, &at.b, &at.c] {
            for &x in set.iter() {
                for &y in set.iter() {
                    let (tx, ty) = (at.tau(x).unwrap(), at.tau(y).unwrap());
                    assert_eq!(x.0.cmp(&y.0), tx.0.cmp(&ty.0));
                    assert_eq!(x.1.cmp(&y.1), tx.1.cmp(&ty.1));
                }
            }
        }
    }
}
