//! Right cosets, double cosets with simultaneous left/right representatives,
//! and mixed double-coset counts.

use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};

/// Numbering of the right cosets `Hg`, ordered by least element.
#[derive(Debug, Clone)]
pub struct RightCosets {
    /// Coset number of every element.
    pub index: Vec<usize>,
    /// Least element of each coset.
    pub reps: Vec<usize>,
}

pub fn right_cosets(g: &PermGroup, h: &Subgroup) -> RightCosets {
    let mut index = vec![usize::MAX; g.order()];
    let mut reps = Vec::with_capacity(g.order() / h.order());
    for x in 0..g.order() {
        if index[x] != usize::MAX {
            continue;
        }
        for &y in h.elements() {
            index[g.mul(y, x)] = reps.len();
        }
        reps.push(x);
    }
    RightCosets { index, reps }
}

fn left_cosets(g: &PermGroup, h: &Subgroup) -> RightCosets {
    let mut index = vec![usize::MAX; g.order()];
    let mut reps = Vec::with_capacity(g.order() / h.order());
    for x in 0..g.order() {
        if index[x] != usize::MAX {
            continue;
        }
        for &y in h.elements() {
            index[g.mul(x, y)] = reps.len();
        }
        reps.push(x);
    }
    RightCosets { index, reps }
}

/// The decomposition `H\G/H`.
#[derive(Debug, Clone)]
pub struct DoubleCosetData {
    pub subgroup: Subgroup,
    /// `reps[i][j]` is `g_ij`; each row lists representatives of both the left
    /// and the right cosets of `H` inside the `i`-th double coset.
    pub reps: Vec<Vec<usize>>,
    /// `n_i`, the number of one-sided cosets in each double coset.
    pub sizes: Vec<usize>,
    /// Double coset of every element (0-based, ordered by least element).
    pub index_of: Vec<usize>,
    /// Right coset `Hg` of every element.
    pub right_coset_index: Vec<usize>,
    /// Least element of each right coset.
    pub right_coset_reps: Vec<usize>,
}

impl DoubleCosetData {
    /// Canonical decomposition: ties are broken by the canonical element order.
    pub fn new(g: &PermGroup, h: &Subgroup) -> Result<Self> {
        Self::with_key(g, h, |x| x as u64)
    }

    /// Decomposition whose matchings and representatives prefer elements with
    /// smaller `key`. Any key yields valid simultaneous representatives.
    pub fn with_key(g: &PermGroup, h: &Subgroup, key: impl Fn(usize) -> u64) -> Result<Self> {
        let right = right_cosets(g, h);
        let left = left_cosets(g, h);
        let mut index_of = vec![usize::MAX; g.order()];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for x in 0..g.order() {
            if index_of[x] != usize::MAX {
                continue;
            }
            let d = members.len();
            let mut m = Vec::new();
            for &a in h.elements() {
                let ax = g.mul(a, x);
                for &b in h.elements() {
                    let y = g.mul(ax, b);
                    if index_of[y] == usize::MAX {
                        index_of[y] = d;
                        m.push(y);
                    }
                }
            }
            m.sort_unstable();
            members.push(m);
        }

        let mut reps = Vec::with_capacity(members.len());
        for m in &members {
            let mut lefts: Vec<usize> = m.iter().map(|&y| left.index[y]).collect();
            lefts.sort_unstable();
            lefts.dedup();
            let mut rights: Vec<usize> = m.iter().map(|&y| right.index[y]).collect();
            rights.sort_unstable();
            rights.dedup();
            if lefts.len() != rights.len() {
                return Err(Error::fault(
                    "double coset with unequal left and right coset counts",
                ));
            }
            let n = lefts.len();
            let local_right = |r: usize| {
                rights
                    .binary_search(&r)
                    .expect("right coset in double coset")
            };
            // Edges: left coset a meets right coset b; remember the preferred witness.
            let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
            for &y in m {
                let a = lefts
                    .binary_search(&left.index[y])
                    .expect("left coset in double coset");
                let b = local_right(right.index[y]);
                match adj[a].iter_mut().find(|(bb, _)| *bb == b) {
                    Some(edge) => {
                        if (key(y), y) < (key(edge.1), edge.1) {
                            edge.1 = y;
                        }
                    }
                    None => adj[a].push((b, y)),
                }
            }
            for edges in &mut adj {
                edges.sort_by_key(|&(_, y)| (key(y), y));
            }
            let matched = bipartite_matching(&adj, n)
                .ok_or_else(|| Error::fault("no perfect matching between left and right cosets"))?;
            let mut row: Vec<usize> = (0..n)
                .map(|a| {
                    let b = matched[a];
                    adj[a]
                        .iter()
                        .find(|(bb, _)| *bb == b)
                        .expect("matched edge")
                        .1
                })
                .collect();
            row.sort_by_key(|&y| (key(y), y));
            reps.push(row);
        }
        // The double coset H itself is first and uses the identity.
        if reps[0].len() != 1 || !h.contains(reps[0][0]) {
            return Err(Error::fault("first double coset is not H"));
        }
        reps[0][0] = g.identity();
        let sizes = reps.iter().map(Vec::len).collect();
        Ok(DoubleCosetData {
            subgroup: h.clone(),
            reps,
            sizes,
            index_of,
            right_coset_index: right.index,
            right_coset_reps: right.reps,
        })
    }

    /// Number of double cosets `d`.
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// `[G:H]`.
    pub fn index(&self) -> usize {
        self.right_coset_reps.len()
    }
}

/// Kuhn's augmenting-path matching; `adj[a]` lists `(b, _)` neighbours of `a`.
/// Returns the partner of each left vertex when a perfect matching exists.
fn bipartite_matching(adj: &[Vec<(usize, usize)>], n: usize) -> Option<Vec<usize>> {
    fn augment(
        a: usize,
        adj: &[Vec<(usize, usize)>],
        seen: &mut [bool],
        owner: &mut [usize],
    ) -> bool {
        for &(b, _) in &adj[a] {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            if owner[b] == usize::MAX || augment(owner[b], adj, seen, owner) {
                owner[b] = a;
                return true;
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; n];
    for a in 0..adj.len() {
        let mut seen = vec![false; n];
        if !augment(a, adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut partner = vec![usize::MAX; adj.len()];
    for (b, &a) in owner.iter().enumerate() {
        partner[a] = b;
    }
    Some(partner)
}

/// `|H\G/K|`, counted as orbits of `K` on the right cosets of `H`.
pub fn mixed_double_coset_count(g: &PermGroup, h: &Subgroup, k: &Subgroup) -> usize {
    let rc = right_cosets(g, h);
    mixed_count_with(g, &rc, k)
}

/// Same as [`mixed_double_coset_count`] with precomputed right cosets of `H`.
pub fn mixed_count_with(g: &PermGroup, rc: &RightCosets, k: &Subgroup) -> usize {
    let mut seen = vec![false; rc.reps.len()];
    let mut orbits = 0;
    let mut stack = Vec::new();
    for start in 0..rc.reps.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(c) = stack.pop() {
            for &y in k.generators() {
                let next = rc.index[g.mul(rc.reps[c], y)];
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_spec::realize_group;
    use crate::perm::Permutation;

    fn grp(text: &str) -> PermGroup {
        realize_group(text, 10_000).unwrap()
    }

    fn el(g: &PermGroup, cycles: &[&[usize]]) -> usize {
        let c: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|p| p - 1).collect())
            .collect();
        g.index_of(&Permutation::from_cycles(g.degree(), &c).unwrap())
            .unwrap()
    }

    fn check_simultaneous(g: &PermGroup, dc: &DoubleCosetData) {
        let h = &dc.subgroup;
        assert_eq!(dc.reps[0], vec![g.identity()]);
        assert_eq!(dc.sizes.iter().sum::<usize>() * h.order(), g.order());
        for (i, row) in dc.reps.iter().enumerate() {
            let mut lefts = Vec::new();
            let mut rights = Vec::new();
            for &x in row {
                assert_eq!(dc.index_of[x], i);
                let mut l: Vec<usize> = h.elements().iter().map(|&y| g.mul(x, y)).collect();
                l.sort_unstable();
                lefts.push(l);
                rights.push(dc.right_coset_index[x]);
            }
            lefts.sort();
            lefts.dedup();
            rights.sort_unstable();
            rights.dedup();
            assert_eq!(lefts.len(), row.len());
            assert_eq!(rights.len(), row.len());
        }
        for x in 0..g.order() {
            for &a in h.generators() {
                assert_eq!(dc.index_of[g.mul(a, x)], dc.index_of[x]);
                assert_eq!(dc.index_of[g.mul(x, a)], dc.index_of[x]);
            }
        }
    }

    #[test]
    fn small_decompositions() {
        let s3 = grp("sym(3)");
        let h = s3.cyclic_subgroup(el(&s3, &[&[1, 2]]));
        let dc = DoubleCosetData::new(&s3, &h).unwrap();
        assert_eq!(dc.sizes, vec![1, 2]);
        check_simultaneous(&s3, &dc);

        let s4 = grp("sym(4)");
        let h = s4.closure(&[el(&s4, &[&[1, 2]]), el(&s4, &[&[1, 2, 3]])]);
        let dc = DoubleCosetData::new(&s4, &h).unwrap();
        assert_eq!(dc.sizes, vec![1, 3]);
        check_simultaneous(&s4, &dc);

        let dc = DoubleCosetData::new(&s4, &s4.whole()).unwrap();
        assert_eq!(dc.sizes, vec![1]);
    }

    #[test]
    fn representatives_for_every_subgroup_class() {
        for text in ["alt(5)", "dihedral(6)", "sym(4)"] {
            let g = grp(text);
            for h in crate::lattice::subgroups_up_to_conjugacy(&g, usize::MAX, 1 << 20).subgroups {
                let dc = DoubleCosetData::new(&g, &h).unwrap();
                check_simultaneous(&g, &dc);
                let shuffled = DoubleCosetData::with_key(&g, &h, |x| {
                    (x as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
                })
                .unwrap();
                check_simultaneous(&g, &shuffled);
                assert_eq!(shuffled.sizes, dc.sizes);
            }
        }
    }

    #[test]
    fn mixed_counts() {
        let a5 = grp("alt(5)");
        let pair = a5
            .subgroup_where(|p| p.apply(3) >= 3 && p.apply(4) >= 3)
            .unwrap();
        assert_eq!(pair.order(), 6);
        let k = a5.cyclic_subgroup(el(&a5, &[&[3, 4, 5]]));
        assert_eq!(mixed_double_coset_count(&a5, &pair, &k), 4);
        assert_eq!(
            mixed_double_coset_count(&a5, &pair, &a5.trivial_subgroup()),
            10
        );
        assert_eq!(mixed_double_coset_count(&a5, &a5.whole(), &k), 1);
    }
}
