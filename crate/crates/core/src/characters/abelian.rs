//! Dual groups of abelian algebra groups, homomorphism tests and fields of
//! values of linear characters.

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::algebra::{AlgebraGroup, GroupElement};
use crate::characters::table::ClassFunction;
use crate::error::{Error, Result};
use crate::scalars::Cyclo;

/// A linear character χ(x) = ζ_m^{exps[x]}, indexed by element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacter {
    pub m: u32,
    pub exps: Vec<u32>,
}

impl LinearCharacter {
    pub fn value(&self, index: usize) -> Cyclo {
        Cyclo::root(self.m, self.exps[index] as i64)
    }

    pub fn to_class_function(&self, group: &AlgebraGroup) -> Result<ClassFunction> {
        ClassFunction::new(group, (0..self.exps.len()).map(|k| self.value(k)).collect())
    }

    /// Order of the largest root of unity taken as a value.
    pub fn root_order(&self) -> u32 {
        let m = self.m;
        self.exps.iter().fold(1u32, |acc, &e| acc.lcm(&(m / (e.gcd(&m)).max(1))))
    }
}

#[derive(Clone, Debug)]
pub struct AbelianDual {
    pub group: AlgebraGroup,
    /// Exponent of the group; all values are powers of ζ_exponent.
    pub exponent: u32,
    /// Cyclic invariant factors, largest first.
    pub invariant_factors: Vec<u32>,
    pub characters: Vec<LinearCharacter>,
}

fn element_order(g: &AlgebraGroup, x: &GroupElement) -> u32 {
    let mut y = x.clone();
    let mut k = 1;
    while !y.is_identity() {
        y = g.mul(&y, x);
        k += 1;
    }
    k
}

/// All linear characters by extending along a chain of subgroups
/// {1} < ⟨g_1⟩ < ⟨g_1, g_2⟩ < …, each g_i of maximal order modulo the
/// previous subgroup.
pub fn abelian_dual(group: &AlgebraGroup) -> Result<AbelianDual> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let size = group.checked_size("abelian dual")?;
    let els = group.elements()?;
    let orders: Vec<u32> = els.iter().map(|x| element_order(group, x)).collect();
    let exponent = orders.iter().copied().max().unwrap_or(1);
    let mul_idx = |a: usize, b: usize| group.index_of(&group.mul(&els[a], &els[b]));

    let mut in_h = vec![false; size];
    in_h[0] = true;
    let mut h: Vec<usize> = vec![0];
    // character tables restricted to h, keyed by element index
    let mut chars: Vec<HashMap<usize, u32>> = vec![HashMap::from([(0, 0)])];
    let mut factors = Vec::new();

    while h.len() < size {
        // order of x modulo H is the least k with x^k ∈ H
        let rel_order = |x: usize| -> (u32, usize) {
            let mut y = x;
            let mut k = 1;
            while !in_h[y] {
                y = mul_idx(y, x);
                k += 1;
            }
            (k, y)
        };
        let (g, (k, gk)) = (0..size)
            .filter(|&x| !in_h[x])
            .map(|x| (x, rel_order(x)))
            .max_by_key(|&(x, (k, _))| (k, std::cmp::Reverse(x)))
            .expect("some element lies outside H");
        factors.push(k);
        // powers g^j for j < k
        let mut powers = vec![0usize];
        for _ in 1..k {
            powers.push(mul_idx(*powers.last().unwrap(), g));
        }
        let mut new_h = Vec::with_capacity(h.len() * k as usize);
        let mut coset_of = Vec::with_capacity(h.len() * k as usize);
        for (j, &gj) in powers.iter().enumerate() {
            for &y in &h {
                let z = mul_idx(gj, y);
                new_h.push(z);
                coset_of.push((j as u32, y));
            }
        }
        let m = exponent;
        let mut next = Vec::with_capacity(chars.len() * k as usize);
        for chi in &chars {
            let a = chi[&gk];
            // k·b ≡ a mod m has the k solutions b0 + t·m/k
            let step = m / k;
            let b0 = (0..step).find(|&b| (k * b) % m == a).expect("extension exists for an abelian p-group");
            for t in 0..k {
                let b = b0 + t * step;
                let mut ext = HashMap::with_capacity(new_h.len());
                for (&z, &(j, y)) in new_h.iter().zip(&coset_of) {
                    ext.insert(z, (j * b + chi[&y]) % m);
                }
                next.push(ext);
            }
        }
        chars = next;
        for &z in &new_h {
            in_h[z] = true;
        }
        h = new_h;
    }
    let characters = chars
        .into_iter()
        .map(|c| LinearCharacter {
            m: exponent,
            exps: (0..size).map(|x| c[&x]).collect(),
        })
        .collect();
    let dual = AbelianDual {
        group: group.clone(),
        exponent,
        invariant_factors: factors,
        characters,
    };
    check_invariant_factors(&dual, &orders)?;
    Ok(dual)
}

/// |{x : x^{p^j} = 1}| must equal Π_i p^{min(j, e_i)} for factors p^{e_i}.
fn check_invariant_factors(dual: &AbelianDual, orders: &[u32]) -> Result<()> {
    let p = (2..=dual.exponent.max(2)).find(|d| dual.exponent.max(2) % d == 0).unwrap();
    let mut pk = 1u32;
    loop {
        let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
        let predicted: u64 = dual.invariant_factors.iter().map(|&f| f.min(pk) as u64).product();
        if count != predicted {
            return Err(Error::Verification(format!(
                "invariant factors {:?} predict {predicted} elements of order dividing {pk}, found {count}",
                dual.invariant_factors
            )));
        }
        if pk >= dual.exponent {
            return Ok(());
        }
        pk *= p;
    }
}

impl AbelianDual {
    /// ⟨χ_a, χ_b⟩ = δ_ab for every pair, by exponent counting.
    pub fn is_orthonormal(&self) -> bool {
        let m = self.exponent as usize;
        let n = self.characters.len();
        for (a, ca) in self.characters.iter().enumerate() {
            for cb in &self.characters[a..] {
                let mut counts = vec![0i64; m];
                for (x, y) in ca.exps.iter().zip(&cb.exps) {
                    counts[(*x as usize + m - *y as usize) % m] += 1;
                }
                let s = Cyclo::from_exponent_counts(self.exponent, &counts);
                let expect = if ca == cb { n as i64 } else { 0 };
                if s != Cyclo::from_int(1, expect) {
                    return false;
                }
            }
        }
        true
    }

    /// Linear characters whose restriction to the subgroup `l` equals the
    /// given linear function, i.e. the constituents of Ind_L^A of it.
    pub fn constituents_of_induced(&self, l: &AlgebraGroup, f: &ClassFunction) -> Result<Vec<LinearCharacter>> {
        if f.group() != l || !l.lie().is_subspace_of(self.group.lie()) {
            return Err(Error::Mismatch("function must live on a subgroup of the abelian group".into()));
        }
        if !homomorphism_test(l, f)?.is_homomorphism {
            return Err(Error::NotHomomorphism);
        }
        let l_els = l.elements()?;
        let idx: Vec<usize> = l_els.iter().map(|x| self.group.index_of(x)).collect();
        Ok(self
            .characters
            .iter()
            .filter(|c| idx.iter().zip(f.values()).all(|(&i, v)| c.value(i) == *v))
            .cloned()
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismTest {
    pub is_homomorphism: bool,
    /// (g, h) with f(gh) ≠ f(g) f(h), as element indices.
    pub witness: Option<(usize, usize)>,
}

/// Exponent k with v = ζ_m^k, if v is such a root.
fn root_exponents(values: &[Cyclo], m: u32) -> Option<Vec<u32>> {
    let mut lookup = HashMap::new();
    for k in 0..m {
        lookup.insert(Cyclo::root(m, k as i64).coeffs().to_vec(), k);
    }
    values
        .iter()
        .map(|v| {
            if m % v.m() != 0 {
                return None;
            }
            lookup.get(v.lift_to(m).coeffs()).copied()
        })
        .collect()
}

/// Exhaustive test of f(gh) = f(g) f(h) on an abelian group.
pub fn homomorphism_test(group: &AlgebraGroup, f: &ClassFunction) -> Result<HomomorphismTest> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if f.group() != group {
        return Err(Error::Mismatch("function lives on another group".into()));
    }
    let size = group.checked_size("homomorphism test")?;
    let els = group.elements()?;
    let table = |a: usize, b: usize| group.index_of(&group.mul(&els[a], &els[b]));
    let m = f.values().iter().fold(1u32, |acc, v| acc.lcm(&v.m()));
    let m = if m % 2 == 1 { 2 * m } else { m };
    if let Some(exps) = root_exponents(f.values(), m) {
        for a in 0..size {
            for b in a..size {
                if exps[table(a, b)] != (exps[a] + exps[b]) % m {
                    return Ok(HomomorphismTest {
                        is_homomorphism: false,
                        witness: Some((a, b)),
                    });
                }
            }
        }
        return Ok(HomomorphismTest {
            is_homomorphism: true,
            witness: None,
        });
    }
    let vals = f.values();
    for a in 0..size {
        for b in a..size {
            if vals[table(a, b)] != &vals[a] * &vals[b] {
                return Ok(HomomorphismTest {
                    is_homomorphism: false,
                    witness: Some((a, b)),
                });
            }
        }
    }
    Ok(HomomorphismTest {
        is_homomorphism: true,
        witness: None,
    })
}

/// Whether a function with f(1) = 1 on an abelian group is a linear character.
pub fn is_character_linear(group: &AlgebraGroup, f: &ClassFunction) -> Result<HomomorphismTest> {
    if *f.degree() != Cyclo::one(1) {
        return Err(Error::InvalidInput("a linear character takes the value 1 at the identity".into()));
    }
    homomorphism_test(group, f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldOfValues {
    /// Least m with every value a power of ζ_m, when all values are roots of unity.
    pub root_order: Option<u32>,
    /// p^k with every value in Q(ζ_{p^k}).
    pub conductor: u32,
    /// Least i with every value in Q(ζ_{p^i}).
    pub level: u32,
}

/// Field generated by the values, for values in prime-power cyclotomic fields.
pub fn field_of_values(values: &[Cyclo]) -> Result<FieldOfValues> {
    let m = values.iter().fold(1u32, |acc, v| acc.lcm(&v.m()));
    let mut level = 0;
    for v in values {
        level = level.max(v.lift_to(m).minimal_level()?);
    }
    let p = (2..=m).find(|d| m % d == 0).unwrap_or(1);
    let root_order = values
        .iter()
        .map(|v| v.root_order())
        .try_fold(1u32, |acc, o| o.map(|o| acc.lcm(&o)));
    Ok(FieldOfValues {
        root_order,
        conductor: if m == 1 { 1 } else { p.pow(level) },
        level,
    })
}

pub fn field_of_values_linear(c: &LinearCharacter) -> Result<FieldOfValues> {
    let vals: Vec<Cyclo> = (0..c.exps.len()).map(|k| c.value(k)).collect();
    field_of_values(&vals)
}

/// Group elements behind a witness pair of indices.
pub fn witness_elements(group: &AlgebraGroup, w: (usize, usize)) -> (GroupElement, GroupElement) {
    (group.element(w.0), group.element(w.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{toeplitz, Algebra, Pattern, Subspace};
    use crate::scalars::{Fe, Field};

    #[test]
    fn dual_of_a3_over_f2() {
        let f = Field::from_order(2).unwrap();
        let (a, sub) = toeplitz(3, &f);
        let g = AlgebraGroup::new(&a, sub).unwrap();
        let d = abelian_dual(&g).unwrap();
        assert_eq!(d.invariant_factors, vec![4]);
        assert_eq!(d.characters.len(), 4);
        assert!(d.is_orthonormal());
        // x = 1 + e12 + e23
        let mut body = crate::algebra::NilMatrix::unit(3, 1, 2, Fe::ONE);
        body.set(2, 3, Fe::ONE);
        let x = g.index_of(&GroupElement::from_body(body));
        let mut vals: Vec<Cyclo> = d.characters.iter().map(|c| c.value(x)).collect();
        vals.sort_by_key(|v| v.to_string());
        let mut expect = vec![Cyclo::one(4), Cyclo::root(4, 1), Cyclo::from_int(4, -1), Cyclo::root(4, 3)];
        expect.sort_by_key(|v| v.to_string());
        assert_eq!(vals, expect);
    }

    #[test]
    fn klein_four() {
        let f = Field::from_order(2).unwrap();
        let a = Algebra::new(Pattern::new(4, [(1, 2), (3, 4)]).unwrap(), f.clone()).unwrap();
        let g = AlgebraGroup::full(&a);
        let d = abelian_dual(&g).unwrap();
        assert_eq!(d.invariant_factors, vec![2, 2]);
        assert_eq!(d.characters.len(), 4);
        assert!(d.characters.iter().all(|c| c.exps.iter().all(|&e| e < 2)));
        assert!(d.is_orthonormal());
    }

    #[test]
    fn elementary_abelian_a2() {
        for q in [2u64, 3, 4, 9] {
            let f = Field::from_order(q).unwrap();
            let (a, sub) = toeplitz(2, &f);
            let g = AlgebraGroup::new(&a, sub).unwrap();
            let d = abelian_dual(&g).unwrap();
            assert_eq!(d.characters.len() as u64, q);
            assert!(d.is_orthonormal());
        }
    }

    #[test]
    fn nonabelian_rejected() {
        let g = AlgebraGroup::full(&Algebra::full(3, Field::from_order(2).unwrap()));
        assert_eq!(abelian_dual(&g).unwrap_err(), Error::NotAbelian);
        let _ = Subspace::zero(g.algebra().field(), 3);
    }

    #[test]
    fn field_of_values_examples() {
        assert_eq!(field_of_values(&[Cyclo::one(1)]).unwrap().level, 0);
        let fv = field_of_values(&[Cyclo::root(4, 1), Cyclo::from_int(4, -1)]).unwrap();
        assert_eq!(fv.level, 2);
        assert_eq!(fv.root_order, Some(4));
        assert_eq!(fv.conductor, 4);
        assert!(field_of_values(&[Cyclo::root(6, 1)]).is_err());
    }
}
