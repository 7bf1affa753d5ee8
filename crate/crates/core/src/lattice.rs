//! Conjugacy classes of subgroups: cyclic ones, all of them (by iterated
//! extension), and minimal overgroups of a given subgroup.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};

/// A conjugacy class of nontrivial cyclic subgroups.
#[derive(Debug, Clone)]
pub struct CyclicClass {
    /// The conjugate whose sorted element list is least.
    pub representative: Subgroup,
    /// Number of conjugate subgroups in the class.
    pub member_count: usize,
    pub order: usize,
    /// Every element generating some member of the class, sorted.
    pub generators: Vec<usize>,
}

impl CyclicClass {
    /// Least element generating the representative.
    pub fn generator(&self) -> usize {
        self.representative.generators()[0]
    }
}

/// Id of `<g>`: the least element generating the same cyclic subgroup.
fn cyclic_ids(g: &PermGroup) -> Vec<usize> {
    let n = g.order();
    let mut ids = vec![usize::MAX; n];
    for x in 0..n {
        if ids[x] != usize::MAX {
            continue;
        }
        let o = g.element_order(x) as u64;
        let mut p = 0;
        for k in 0..o {
            if num_integer::gcd(k, o) == 1 {
                ids[p] = x;
            }
            p = g.mul(p, x);
        }
        ids[x] = x;
    }
    ids
}

/// One entry per conjugacy class of nontrivial cyclic subgroups, sorted by
/// `(order, member_count)` and then by representative.
pub fn cyclic_subgroup_classes(g: &PermGroup) -> Vec<CyclicClass> {
    let ids = cyclic_ids(g);
    let mut assigned = vec![false; g.classes().len()];
    let mut out = Vec::new();
    for x in 1..g.order() {
        let cx = g.class_of(x);
        if assigned[cx] || ids[x] != x {
            continue;
        }
        // Union of the element classes of all generators of <x>.
        let o = g.element_order(x) as u64;
        let mut elem_classes: Vec<usize> = Vec::new();
        let mut p = 0;
        for k in 0..o {
            if num_integer::gcd(k, o) == 1 {
                elem_classes.push(g.class_of(p));
            }
            p = g.mul(p, x);
        }
        elem_classes.sort_unstable();
        elem_classes.dedup();
        let mut generators: Vec<usize> = Vec::new();
        for &c in &elem_classes {
            assigned[c] = true;
            generators.extend_from_slice(&g.classes()[c].elements);
        }
        generators.sort_unstable();
        let mut members: Vec<usize> = generators.iter().map(|&y| ids[y]).collect();
        members.sort_unstable();
        members.dedup();
        let representative = members
            .iter()
            .map(|&y| g.cyclic_subgroup(y))
            .min_by(|a, b| a.elements().cmp(b.elements()))
            .expect("class is nonempty");
        out.push(CyclicClass {
            order: o as usize,
            member_count: members.len(),
            representative,
            generators,
        });
    }
    out.sort_by(|a, b| {
        (a.order, a.member_count)
            .cmp(&(b.order, b.member_count))
            .then_with(|| a.representative.elements().cmp(b.representative.elements()))
    });
    out
}

/// Index of the cyclic class containing `<g>`, or `None` for the identity.
pub fn cyclic_class_of(classes: &[CyclicClass], g: usize) -> Option<usize> {
    classes
        .iter()
        .position(|c| c.generators.binary_search(&g).is_ok())
}

#[derive(Debug, Clone)]
pub struct SubgroupClasses {
    /// Class representatives sorted by decreasing order, then by element list.
    pub subgroups: Vec<Subgroup>,
    /// False when the work cap stopped the search early.
    pub complete: bool,
}

pub const DEFAULT_WORK_CAP: usize = 2_000_000;

struct ClassIndex<'g> {
    group: &'g PermGroup,
    reps: Vec<Subgroup>,
    by_key: HashMap<(usize, Vec<u32>), Vec<usize>>,
}

impl<'g> ClassIndex<'g> {
    /// Inserts `s` unless a conjugate is already present; returns whether it was new.
    fn insert(&mut self, s: Subgroup) -> bool {
        let key = (s.order(), self.group.class_distribution(s.elements()));
        let bucket = self.by_key.entry(key).or_default();
        for &i in bucket.iter() {
            if self.group.conjugating_element(&s, &self.reps[i]).is_some() {
                return false;
            }
        }
        bucket.push(self.reps.len());
        self.reps.push(s);
        true
    }
}

/// Representatives of all conjugacy classes of subgroups with `[G:H] <= index_cap`.
///
/// Starts from the trivial subgroup and repeatedly adjoins one element of
/// prime-power order to each class representative. Every subgroup is generated
/// by its prime-power-order elements, so the search is exhaustive unless more
/// than `work_cap` closures are needed.
pub fn subgroups_up_to_conjugacy(
    g: &PermGroup,
    index_cap: usize,
    work_cap: usize,
) -> SubgroupClasses {
    let prime_power: Vec<usize> = (1..g.order())
        .filter(|&x| is_prime_power(g.element_order(x) as u64))
        .collect();
    let mut index = ClassIndex {
        group: g,
        reps: Vec::new(),
        by_key: HashMap::new(),
    };
    index.insert(g.trivial_subgroup());
    let mut work = 0usize;
    let mut complete = true;
    let mut next = 0;
    'outer: while next < index.reps.len() {
        let s = index.reps[next].clone();
        next += 1;
        let mut tried = FixedBitSet::with_capacity(g.order());
        for &x in &prime_power {
            if s.contains(x) || tried.contains(x) {
                continue;
            }
            // <s, x> = <s, s' x^k> for s' in s and k prime to ord(x).
            let o = g.element_order(x) as u64;
            let mut p = x;
            for k in 1..o {
                if num_integer::gcd(k, o) == 1 {
                    for &h in s.elements() {
                        tried.insert(g.mul(h, p));
                    }
                }
                p = g.mul(p, x);
            }
            if work >= work_cap {
                complete = false;
                break 'outer;
            }
            work += 1;
            index.insert(g.extend(&s, x));
        }
    }
    let mut subgroups: Vec<Subgroup> = index
        .reps
        .into_iter()
        .filter(|s| g.order() / s.order() <= index_cap)
        .collect();
    subgroups.sort_by(|a, b| {
        b.order()
            .cmp(&a.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    SubgroupClasses {
        subgroups,
        complete,
    }
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = n;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

/// Inclusion-minimal subgroups among `<H, g>` for `g` outside `H`.
///
/// Every subgroup strictly containing `H` contains one of these.
pub fn minimal_overgroups(g: &PermGroup, h: &Subgroup) -> Result<Vec<Subgroup>> {
    if h.order() == g.order() {
        return Err(Error::InvalidArgument(
            "minimal overgroups of the whole group do not exist".into(),
        ));
    }
    let mut tried = FixedBitSet::with_capacity(g.order());
    let mut found: Vec<Subgroup> = Vec::new();
    for x in 0..g.order() {
        if h.contains(x) || tried.contains(x) {
            continue;
        }
        for &y in h.elements() {
            tried.insert(g.mul(y, x));
        }
        let n = g.extend(h, x);
        if !found.contains(&n) {
            found.push(n);
        }
    }
    let minimal: Vec<Subgroup> = found
        .iter()
        .filter(|n| {
            !found
                .iter()
                .any(|m| m.order() < n.order() && m.is_subset_of(n))
        })
        .cloned()
        .collect();
    Ok(minimal)
}
