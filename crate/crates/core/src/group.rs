//! Fully enumerated permutation groups and their subgroups.
//!
//! Elements are kept in canonical order (lexicographic on image arrays), so an
//! element is identified by its index and "least element" always means least
//! index. The identity is index 0.

use std::collections::{HashMap, VecDeque};
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 10_000;
/// Groups up to this order get a precomputed multiplication table.
const TABLE_LIMIT: usize = 2048;

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: usize,
    /// Sorted member indices.
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<u32>,
    exponent: u32,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl PermGroup {
    /// Enumerates the group generated by `gens` on `degree` points.
    pub fn generate(degree: usize, gens: &[Permutation], cap: usize) -> Result<PermGroup> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::InvalidArgument(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in gens {
                let y = s.compose(&x);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrderCapExceeded {
                            order: seen.len() as u128 + 1,
                            cap,
                        });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort();
        let lookup: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for (a, pa) in elements.iter().enumerate() {
                for (b, pb) in elements.iter().enumerate() {
                    t[a * n + b] = lookup[&pa.compose(pb)] as u32;
                }
            }
            t
        });
        let inverses = elements.iter().map(|p| lookup[&p.inverse()]).collect();
        let orders: Vec<u32> = elements.iter().map(|p| p.order() as u32).collect();
        let exponent = orders.iter().fold(1u32, |acc, &o| num_integer::lcm(acc, o));
        let mut generators: Vec<usize> =
            gens.iter().map(|g| lookup[g]).filter(|&i| i != 0).collect();
        generators.dedup();

        let mut group = PermGroup {
            degree,
            generators,
            elements,
            lookup,
            table,
            inverses,
            orders,
            exponent,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.compute_classes();
        Ok(group)
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                k += 1;
                for &s in &self.generators {
                    let y = self.conjugate(x, s);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: start,
                elements: members,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.lookup[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x g x^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inverses[x])
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let k = k % self.orders[g] as u64;
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> u32 {
        self.orders[g]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Per-class member counts of a subset; a conjugation invariant of subgroups.
    pub fn class_distribution(&self, elements: &[usize]) -> Vec<u32> {
        let mut counts = vec![0u32; self.classes.len()];
        for &g in elements {
            counts[self.class_of[g]] += 1;
        }
        counts
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_parts(self.order(), vec![0], Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts(
            self.order(),
            (0..self.order()).collect(),
            self.generators.clone(),
        )
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| Error::NotInGroup(g.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&idx))
    }

    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        gens.iter()
            .fold(self.trivial_subgroup(), |s, &g| self.extend(&s, g))
    }

    /// `<s, g>` by Dimino's coset extension; `s` must be a subgroup.
    pub fn extend(&self, s: &Subgroup, g: usize) -> Subgroup {
        if s.contains(g) {
            return s.clone();
        }
        let mut gens = s.gens.clone();
        gens.push(g);
        let mut members = s.members.clone();
        let mut elements = s.elements.clone();
        let mut reps = vec![0usize];
        let mut pos = 0;
        while pos < reps.len() {
            let r = reps[pos];
            pos += 1;
            for &t in &gens {
                let y = self.mul(r, t);
                if !members.contains(y) {
                    reps.push(y);
                    for &x in &s.elements {
                        let z = self.mul(x, y);
                        members.insert(z);
                        elements.push(z);
                    }
                }
            }
        }
        elements.sort_unstable();
        Subgroup {
            elements,
            members,
            gens,
        }
    }

    /// Validates that `elements` form a subgroup and wraps it.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut members = FixedBitSet::with_capacity(self.order());
        for &g in elements {
            if g >= self.order() {
                return Err(Error::InvalidArgument(format!(
                    "element index {g} out of range"
                )));
            }
            members.insert(g);
        }
        // Greedy generating set, then confirm the closure adds nothing.
        let mut sub = self.trivial_subgroup();
        for g in members.ones() {
            if !sub.contains(g) {
                sub = self.extend(&sub, g);
                if sub.elements.iter().any(|&x| !members.contains(x)) {
                    return Err(Error::InvalidArgument(
                        "element set is not closed under multiplication".into(),
                    ));
                }
            }
        }
        if sub.order() != members.count_ones(..) {
            return Err(Error::fault("subgroup closure lost elements"));
        }
        Ok(sub)
    }

    /// The subgroup of all elements satisfying `pred`; errors if that set is not a subgroup.
    pub fn subgroup_where(&self, pred: impl Fn(&Permutation) -> bool) -> Result<Subgroup> {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&i| pred(&self.elements[i]))
            .collect();
        self.subgroup_from_elements(&elems)
    }

    pub fn cyclic_subgroup(&self, g: usize) -> Subgroup {
        self.closure(&[g])
    }

    /// `x S x^-1`.
    pub fn conjugate_subgroup(&self, s: &Subgroup, x: usize) -> Subgroup {
        let xi = self.inv(x);
        let mut elements: Vec<usize> = s
            .elements
            .iter()
            .map(|&h| self.mul(self.mul(x, h), xi))
            .collect();
        elements.sort_unstable();
        let gens = s.gens.iter().map(|&h| self.conjugate(h, x)).collect();
        Subgroup::from_parts(self.order(), elements, gens)
    }

    /// Some `x` with `x S x^-1 = T`, if one exists.
    pub fn conjugating_element(&self, s: &Subgroup, t: &Subgroup) -> Option<usize> {
        if s.order() != t.order() {
            return None;
        }
        (0..self.order()).find(|&x| s.gens.iter().all(|&h| t.contains(self.conjugate(h, x))))
    }

    pub fn normalizer_order(&self, s: &Subgroup) -> usize {
        (0..self.order())
            .filter(|&x| s.gens.iter().all(|&h| s.contains(self.conjugate(h, x))))
            .count()
    }

    /// Smallest normal subgroup containing `s`.
    pub fn normal_closure(&self, s: &Subgroup) -> Subgroup {
        let mut n = s.clone();
        loop {
            let mut grew = false;
            let gens = n.gens.clone();
            for h in gens {
                for &x in &self.generators {
                    let y = self.conjugate(h, x);
                    if !n.contains(y) {
                        n = self.extend(&n, y);
                        grew = true;
                    }
                }
            }
            if !grew {
                return n;
            }
        }
    }

    /// True when every product and inverse of `s` stays inside `s`.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let mut set = FixedBitSet::with_capacity(self.order());
        for &g in elements {
            set.insert(g);
        }
        set.contains(0)
            && elements.iter().all(|&a| {
                set.contains(self.inv(a)) && elements.iter().all(|&b| set.contains(self.mul(a, b)))
            })
    }
}

/// A subgroup of a [`PermGroup`], stored as sorted element indices of the parent.
#[derive(Debug, Clone)]
pub struct Subgroup {
    elements: Vec<usize>,
    members: FixedBitSet,
    gens: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_parts(parent_order: usize, elements: Vec<usize>, gens: Vec<usize>) -> Self {
        let mut members = FixedBitSet::with_capacity(parent_order);
        for &g in &elements {
            members.insert(g);
        }
        Subgroup {
            elements,
            members,
            gens,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn index_in(&self, group: &PermGroup) -> usize {
        group.order() / self.order()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let gens: Vec<_> = (0..n - 1)
            .map(|i| Permutation::from_cycles(n, &[vec![i, i + 1]]).unwrap())
            .collect();
        PermGroup::generate(n, &gens, DEFAULT_ORDER_CAP).unwrap()
    }

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        let c: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|p| p - 1).collect())
            .collect();
        Permutation::from_cycles(n, &c).unwrap()
    }

    #[test]
    fn enumeration_and_table_agree() {
        let g = sym(4);
        assert_eq!(g.order(), 24);
        assert_eq!(g.exponent(), 12);
        assert!(g.element(0).is_identity());
        for a in 0..24 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..24 {
                let p = g.element(a).compose(g.element(b));
                assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            }
        }
        assert_eq!(g.classes().len(), 5);
        let sizes: usize = g.classes().iter().map(|c| c.size()).sum();
        assert_eq!(sizes, 24);
    }

    #[test]
    fn order_cap_is_enforced() {
        let gens: Vec<_> = (0..6)
            .map(|i| Permutation::from_cycles(7, &[vec![i, i + 1]]).unwrap())
            .collect();
        assert!(matches!(
            PermGroup::generate(7, &gens, 1000),
            Err(Error::OrderCapExceeded { cap: 1000, .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let s3 = sym(3);
        assert_eq!(
            s3.subgroup_closure(&[perm(3, &[&[1, 2]])]).unwrap().order(),
            2
        );
        let s4 = sym(4);
        let h = s4
            .subgroup_closure(&[perm(4, &[&[1, 2]]), perm(4, &[&[1, 2, 3]])])
            .unwrap();
        assert_eq!(h.order(), 6);
        assert!(h.elements().iter().all(|&g| s4.element(g).apply(3) == 3));
        assert!(s4.is_subgroup(h.elements()));
        let outside = Permutation::from_cycles(5, &[vec![0, 4]]).unwrap();
        assert!(matches!(
            s4.subgroup_closure(&[outside]),
            Err(Error::NotInGroup(_))
        ));
    }

    #[test]
    fn subgroup_from_elements_rejects_non_subgroups() {
        let g = sym(3);
        let t = g.index_of(&perm(3, &[&[1, 2]])).unwrap();
        let u = g.index_of(&perm(3, &[&[2, 3]])).unwrap();
        assert!(g.subgroup_from_elements(&[0, t, u]).is_err());
        assert_eq!(g.subgroup_from_elements(&[0, t]).unwrap().order(), 2);
    }

    #[test]
    fn normal_closure_of_transposition_is_everything() {
        let g = sym(4);
        let t = g.index_of(&perm(4, &[&[1, 2]])).unwrap();
        let n = g.normal_closure(&g.cyclic_subgroup(t));
        assert_eq!(n.order(), 24);
        let d = g.index_of(&perm(4, &[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(g.normal_closure(&g.cyclic_subgroup(d)).order(), 4);
    }
}
