//! Functions on algebra groups stored as full value tables.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{AlgebraGroup, GroupElement};
use crate::error::{Error, Result};
use crate::scalars::Cyclo;

/// A function G → Q(ζ_m) given by its value at every element, indexed as
/// in [`AlgebraGroup::element`].
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: AlgebraGroup,
    values: Vec<Cyclo>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &ClassFunction) -> bool {
        self.group == other.group && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(group: &AlgebraGroup, values: Vec<Cyclo>) -> Result<ClassFunction> {
        let size = group.checked_size("value table")?;
        if values.len() != size {
            return Err(Error::Mismatch(format!("{} values for a group of order {size}", values.len())));
        }
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn from_fn<F>(group: &AlgebraGroup, f: F) -> Result<ClassFunction>
    where
        F: Fn(&GroupElement) -> Cyclo,
    {
        let size = group.checked_size("value table")?;
        let values = (0..size).map(|k| f(&group.element(k))).collect();
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn constant(group: &AlgebraGroup, c: i64) -> Result<ClassFunction> {
        ClassFunction::from_fn(group, |_| Cyclo::from_int(1, c))
    }

    pub fn group(&self) -> &AlgebraGroup {
        &self.group
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn value(&self, g: &GroupElement) -> &Cyclo {
        &self.values[self.group.index_of(g)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclo {
        &self.values[0]
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.group != other.group {
            return Err(Error::Mismatch("functions live on different groups".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    /// Pointwise product (tensor product of characters).
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    pub fn scale(&self, r: &BigRational) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    /// ⟨f, g⟩ = (1/|G|) Σ f(x) conj(g(x)).
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyclo> {
        self.check_same(other)?;
        let mut acc = Cyclo::zero(1);
        for (a, b) in self.values.iter().zip(&other.values) {
            acc = &acc + &(a * &b.conj());
        }
        let n = BigRational::from_integer(BigInt::from(self.values.len()));
        Ok(acc.scale(&(BigRational::from_integer(1.into()) / n)))
    }

    /// Invariance under conjugation by the group's generators, which is
    /// invariance under the whole group.
    pub fn is_class_function(&self) -> bool {
        let g = &self.group;
        let gens = g.generators();
        let invs: Vec<_> = gens.iter().map(|s| g.inv(s)).collect();
        (0..self.values.len()).all(|k| {
            let x = g.element(k);
            gens.iter().zip(&invs).all(|(s, si)| {
                let y = g.mul(&g.mul(s, &x), si);
                self.values[g.index_of(&y)] == self.values[k]
            })
        })
    }

    /// Restriction to a subgroup H ≤ G.
    pub fn restrict(&self, h: &AlgebraGroup) -> Result<ClassFunction> {
        if h.algebra() != self.group.algebra() || !h.lie().is_subspace_of(self.group.lie()) {
            return Err(Error::Mismatch("restriction to a non-subgroup".into()));
        }
        ClassFunction::from_fn(h, |x| self.value(x).clone())
    }

    /// f∘φ for a map φ from another group into this one.
    pub fn pull_back<F>(&self, source: &AlgebraGroup, phi: F) -> Result<ClassFunction>
    where
        F: Fn(&GroupElement) -> Result<GroupElement>,
    {
        let size = source.checked_size("value table")?;
        let mut values = Vec::with_capacity(size);
        for k in 0..size {
            let y = phi(&source.element(k))?;
            if !self.group.contains(&y) {
                return Err(Error::Mismatch("map leaves the target group".into()));
            }
            values.push(self.value(&y).clone());
        }
        ClassFunction::new(source, values)
    }

    /// Induction to G ⊇ H, evaluated class by class:
    /// Ind(f)(g) = |G| / (|H| |g^G|) Σ_{y ∈ g^G ∩ H} f(y).
    pub fn induce(&self, g: &AlgebraGroup) -> Result<ClassFunction> {
        let h = &self.group;
        if h.algebra() != g.algebra() || !h.lie().is_subspace_of(g.lie()) {
            return Err(Error::Mismatch("induction from a non-subgroup".into()));
        }
        let classes = conjugacy_classes(g)?;
        let size = g.checked_size("value table")?;
        let mut values = vec![Cyclo::zero(1); size];
        let hsize = h.checked_size("value table")?;
        for class in &classes {
            let mut acc = Cyclo::zero(1);
            for &k in class {
                let y = g.element(k);
                if h.contains(&y) {
                    acc = &acc + self.value(&y);
                }
            }
            let factor = BigRational::new(
                BigInt::from(size),
                BigInt::from(hsize) * BigInt::from(class.len()),
            );
            let v = acc.scale(&factor);
            for &k in class {
                values[k] = v.clone();
            }
        }
        ClassFunction::new(g, values)
    }

    /// Induction straight from the defining sum
    /// Ind(f)(g) = (1/|H|) Σ_{x ∈ G, xgx⁻¹ ∈ H} f(xgx⁻¹).
    pub fn induce_by_definition(&self, g: &AlgebraGroup) -> Result<ClassFunction> {
        let h = &self.group;
        if h.algebra() != g.algebra() || !h.lie().is_subspace_of(g.lie()) {
            return Err(Error::Mismatch("induction from a non-subgroup".into()));
        }
        let els = g.elements()?;
        let invs: Vec<_> = els.iter().map(|x| g.inv(x)).collect();
        let hsize = h.checked_size("value table")?;
        let scale = BigRational::new(1.into(), BigInt::from(hsize));
        ClassFunction::from_fn(g, |y| {
            let mut acc = Cyclo::zero(1);
            for (x, xi) in els.iter().zip(&invs) {
                let c = g.mul(&g.mul(x, y), xi);
                if h.contains(&c) {
                    acc = &acc + self.value(&c);
                }
            }
            acc.scale(&scale)
        })
    }
}

/// Conjugacy classes as lists of element indices, ordered by least index.
pub fn conjugacy_classes(g: &AlgebraGroup) -> Result<Vec<Vec<usize>>> {
    let size = g.checked_size("conjugacy classes")?;
    let gens = g.generators();
    let invs: Vec<_> = gens.iter().map(|s| g.inv(s)).collect();
    let mut class_of = vec![usize::MAX; size];
    let mut classes = Vec::new();
    for start in 0..size {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut frontier = vec![start];
        while let Some(k) = frontier.pop() {
            let x = g.element(k);
            for (s, si) in gens.iter().zip(&invs) {
                let y = g.index_of(&g.mul(&g.mul(s, &x), si));
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Subspace};
    use crate::scalars::Field;

    #[test]
    fn regular_character_from_trivial_subgroup() {
        let a = Algebra::full(2, Field::from_order(2).unwrap());
        let g = AlgebraGroup::full(&a);
        let triv = g.subgroup(Subspace::zero(a.field(), a.dim())).unwrap();
        let one = ClassFunction::constant(&triv, 1).unwrap();
        let reg = one.induce(&g).unwrap();
        assert_eq!(reg.values(), &[Cyclo::from_int(1, 2), Cyclo::from_int(1, 0)]);
        assert_eq!(reg, one.induce_by_definition(&g).unwrap());
        let c = ClassFunction::constant(&g, 1).unwrap();
        assert_eq!(c.inner_product(&c).unwrap(), Cyclo::one(1));
    }

    #[test]
    fn class_counts() {
        // UT_3(q) has q² + q − 1 classes
        for q in [2u64, 3] {
            let g = AlgebraGroup::full(&Algebra::full(3, Field::from_order(q).unwrap()));
            assert_eq!(conjugacy_classes(&g).unwrap().len() as u64, q * q + q - 1);
        }
    }
}
