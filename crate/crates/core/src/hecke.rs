//! The Hecke ring of a subgroup, the integers `a_i`, tuple data `(b_i, b, q)`,
//! correspondence matrices on a generic fibre and their algebraic identities.

use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{permutation_character, RationalIrrep};
use crate::cosets::DoubleCosetData;
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Structure constants: `F_i F_j = Σ_k c[i][j][k] F_k` for `F_i = (1/|H|) Σ_{x∈H_i} x`.
#[derive(Debug, Clone)]
pub struct HeckeRing {
    pub c: Vec<Vec<Vec<i64>>>,
}

impl HeckeRing {
    pub fn new(g: &PermGroup, dc: &DoubleCosetData) -> Result<Self> {
        let d = dc.count();
        let h = dc.subgroup.order() as i64;
        let mut counts = vec![vec![vec![0i64; d]; d]; d];
        for (k, row) in dc.reps.iter().enumerate() {
            let gk = row[0];
            for x in 0..g.order() {
                let i = dc.index_of[x];
                let j = dc.index_of[g.mul(g.inv(x), gk)];
                counts[i][j][k] += 1;
            }
        }
        for v in counts.iter_mut().flatten().flatten() {
            if *v % h != 0 {
                return Err(Error::fault("Hecke structure constant is not an integer"));
            }
            *v /= h;
        }
        Ok(HeckeRing { c: counts })
    }

    pub fn dimension(&self) -> usize {
        self.c.len()
    }
}

/// `a_i = Σ_{h∈H} tr χ(h g_i1⁻¹)`, checked against every representative `g_ij`.
pub fn coefficients_a(g: &PermGroup, dc: &DoubleCosetData, w: &RationalIrrep) -> Result<Vec<i64>> {
    let h = &dc.subgroup;
    let sum_at = |x: usize| -> i64 {
        let xi = g.inv(x);
        h.elements()
            .iter()
            .map(|&y| w.trace_values[g.class_of(g.mul(y, xi))])
            .sum()
    };
    let mut a = Vec::with_capacity(dc.count());
    for row in &dc.reps {
        let ai = sum_at(row[0]);
        if row[1..].iter().any(|&x| sum_at(x) != ai) {
            return Err(Error::fault("a_i depends on the coset representative"));
        }
        a.push(ai);
    }
    let a1 = (w.field_degree * h.order()) as i64;
    if a[0] == a1 && a.iter().any(|&ai| ai > a1) {
        return Err(Error::fault("a_i exceeds a_1 although dim V^H = 1"));
    }
    Ok(a)
}

/// Checks that `(n/|G|) Σ a_i F_i` is idempotent; on failure returns the first bad `k`.
pub fn idempotent_check(
    hr: &HeckeRing,
    a: &[i64],
    n: u64,
    group_order: usize,
) -> std::result::Result<(), usize> {
    let d = hr.dimension();
    for k in 0..d {
        let mut s: i128 = 0;
        for i in 0..d {
            for j in 0..d {
                s += a[i] as i128 * a[j] as i128 * hr.c[i][j][k] as i128;
            }
        }
        if s * n as i128 != group_order as i128 * a[k] as i128 {
            return Err(k);
        }
    }
    Ok(())
}

/// Numeric data of a tuple `(W_1, .., W_r)` for a subgroup `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleData {
    /// `a[k][i]` for representation `k` and double coset `i`.
    pub a: Vec<Vec<i64>>,
    pub b_i: Vec<i64>,
    pub b: i64,
    pub b1: i64,
    /// Common degree `n`.
    pub n: u64,
    /// `[L:Q]`.
    pub field_degree: usize,
    pub q: i64,
    pub r: usize,
    pub group_order: usize,
    pub subgroup_order: usize,
    /// `[G:H]`.
    pub index: usize,
    pub deg_k: i64,
    /// The constant of the quadratic relation.
    pub c: i64,
}

pub fn tuple_data(g: &PermGroup, dc: &DoubleCosetData, ws: &[RationalIrrep]) -> Result<TupleData> {
    let first = ws
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty representation tuple".into()))?;
    if dc.count() < 2 {
        return Err(Error::InvalidArgument(
            "H = G has a single double coset".into(),
        ));
    }
    let a: Vec<Vec<i64>> = ws
        .iter()
        .map(|w| coefficients_a(g, dc, w))
        .collect::<Result<_>>()?;
    let d = dc.count();
    let b_i: Vec<i64> = (0..d).map(|i| a.iter().map(|row| row[i]).sum()).collect();
    let b1 = b_i[0];
    let b = b_i[1..].iter().fold(0i64, |acc, &x| acc.gcd(&(b1 - x)));
    if b == 0 {
        return Err(Error::HypothesisViolation(
            "b_i = b_1 for every i, so b = 0".into(),
        ));
    }
    let order = g.order() as i64;
    let n = first.n;
    let (q, rem) = order.div_rem(&(b * n as i64));
    if rem != 0 {
        return Err(Error::fault(format!(
            "q = {order}/({b}*{n}) is not an integer"
        )));
    }
    let index = dc.index() as i64;
    let r = ws.len() as i64;
    let l = first.field_degree as i64;
    let (deg_part, rem) = (r * order * l).div_rem(&b);
    if rem != 0 {
        return Err(Error::fault("deg K is not an integer"));
    }
    let deg_k = 1 + deg_part - index;
    // c b^2 = (b - b1)((b1 - b)[G:H] + q b)
    let c_num = (b - b1) as i128 * ((b1 - b) as i128 * index as i128 + q as i128 * b as i128);
    let b2 = b as i128 * b as i128;
    if c_num % b2 != 0 {
        return Err(Error::fault(
            "the quadratic-relation constant c is not an integer",
        ));
    }
    Ok(TupleData {
        a,
        b_i,
        b,
        b1,
        n,
        field_degree: first.field_degree,
        q,
        r: ws.len(),
        group_order: g.order(),
        subgroup_order: dc.subgroup.order(),
        index: dc.index(),
        deg_k,
        c: (c_num / b2) as i64,
    })
}

/// `(a_k1/b, .., a_kd/b)`.
pub fn kanev_form_values(td: &TupleData, k: usize) -> Vec<BigRational> {
    td.a[k]
        .iter()
        .map(|&x| BigRational::new(x.into(), td.b.into()))
        .collect()
}

/// Dense square integer matrix with overflow-checked products.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    pub size: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix {
            size,
            data: vec![0; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::scalar(size, 1)
    }

    pub fn scalar(size: usize, s: i64) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.data[i * size + i] = s;
        }
        m
    }

    pub fn all_ones(size: usize) -> Self {
        IntMatrix {
            size,
            data: vec![1; size * size],
        }
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                data.push(f(i, j));
            }
        }
        IntMatrix { size, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.size + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.data
            .chunks(self.size.max(1))
            .map(|r| r.iter().sum())
            .collect()
    }

    pub fn column_sums(&self) -> Vec<i64> {
        (0..self.size)
            .map(|j| (0..self.size).map(|i| self.get(i, j)).sum())
            .collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, i64::checked_sub)
    }

    pub fn checked_scale(&self, s: i64) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|&x| x.checked_mul(s))
            .collect::<Option<_>>()
            .ok_or_else(overflow)?;
        Ok(IntMatrix {
            size: self.size,
            data,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let n = self.size;
        let rows: Vec<Option<Vec<i64>>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut acc = vec![0i128; n];
                for k in 0..n {
                    let a = self.get(i, k) as i128;
                    if a == 0 {
                        continue;
                    }
                    let row = &other.data[k * n..(k + 1) * n];
                    for (slot, &b) in acc.iter_mut().zip(row) {
                        *slot += a * b as i128;
                    }
                }
                acc.into_iter().map(|x| i64::try_from(x).ok()).collect()
            })
            .collect();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            data.extend(row.ok_or_else(overflow)?);
        }
        Ok(IntMatrix { size: n, data })
    }

    fn zip(&self, other: &Self, f: fn(i64, i64) -> Option<i64>) -> Result<Self> {
        assert_eq!(self.size, other.size, "matrix sizes differ");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect::<Option<_>>()
            .ok_or_else(overflow)?;
        Ok(IntMatrix {
            size: self.size,
            data,
        })
    }
}

fn overflow() -> Error {
    Error::fault("integer overflow in correspondence matrix arithmetic")
}

/// `M[Hτ, Hσ] = a_{index(τσ⁻¹)}` over the right cosets of `H`.
pub fn matrix_dbar(g: &PermGroup, dc: &DoubleCosetData, a: &[i64]) -> IntMatrix {
    let reps = &dc.right_coset_reps;
    IntMatrix::from_fn(reps.len(), |s, t| {
        a[dc.index_of[g.mul(reps[s], g.inv(reps[t]))]]
    })
}

/// The Kanev correspondence on a generic fibre. Entries off `H` are
/// `(b_1 - b_i)/b - 1`; a negative entry means the hypothesis fails.
pub fn matrix_k(g: &PermGroup, dc: &DoubleCosetData, td: &TupleData) -> Result<IntMatrix> {
    let reps = &dc.right_coset_reps;
    let weights: Vec<i64> = td
        .b_i
        .iter()
        .enumerate()
        .map(|(i, &bi)| if i == 0 { 0 } else { (td.b1 - bi) / td.b - 1 })
        .collect();
    if let Some(i) = weights.iter().position(|&w| w < 0) {
        return Err(Error::HypothesisViolation(format!(
            "Kanev correspondence has negative multiplicity on double coset {}",
            i + 1
        )));
    }
    Ok(IntMatrix::from_fn(reps.len(), |s, t| {
        weights[dc.index_of[g.mul(reps[s], g.inv(reps[t]))]]
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<IdentityCheck>,
}

impl VerificationReport {
    fn record(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(IdentityCheck {
            name: name.into(),
            pass,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Runs every matrix identity for a tuple: the trace relations, orthogonality
/// of the blocks, the cubic and quadratic relations for `M_K`, and the
/// structural properties of each matrix.
pub fn verify_matrix_identities(
    td: &TupleData,
    blocks: &[IntMatrix],
    mk: &IntMatrix,
) -> Result<VerificationReport> {
    let size = mk.size;
    let t = IntMatrix::all_ones(size);
    let e = IntMatrix::identity(size);
    let idx = td.index as i64;
    let mut rep = VerificationReport::default();

    rep.record("trace-square", t.checked_mul(&t)? == t.checked_scale(idx)?);
    for (k, m) in blocks.iter().enumerate() {
        rep.record(
            format!("block-{k}-annihilates-trace"),
            m.checked_mul(&t)?.is_zero() && t.checked_mul(m)?.is_zero(),
        );
        rep.record(format!("block-{k}-symmetric"), m.is_symmetric());
        rep.record(
            format!("block-{k}-degree-zero"),
            m.column_sums().iter().all(|&s| s == 0),
        );
        let ratio = (td.group_order as i64) / td.n as i64;
        rep.record(
            format!("block-{k}-quasi-idempotent"),
            td.group_order as i64 % td.n as i64 == 0
                && m.checked_mul(m)? == m.checked_scale(ratio)?,
        );
        for (l, other) in blocks.iter().enumerate().skip(k + 1) {
            rep.record(
                format!("blocks-{k}-{l}-orthogonal"),
                m.checked_mul(other)?.is_zero(),
            );
        }
    }

    let n = mk.checked_sub(&e)?;
    let cubic = n
        .checked_mul(&mk.checked_add(&IntMatrix::scalar(size, td.q - 1))?)?
        .checked_mul(&mk.checked_sub(&IntMatrix::scalar(size, td.deg_k))?)?;
    rep.record("cubic", cubic.is_zero());
    let quadratic = n
        .checked_mul(&n)?
        .checked_add(&n.checked_scale(td.q)?)?
        .checked_add(&t.checked_scale(td.c)?)?;
    rep.record("quadratic", quadratic.is_zero());
    rep.record(
        "kanev-trace",
        mk.checked_mul(&t)? == t.checked_scale(td.deg_k)?,
    );

    rep.record("kanev-nonnegative", mk.data.iter().all(|&x| x >= 0));
    rep.record("kanev-zero-diagonal", (0..size).all(|i| mk.get(i, i) == 0));
    rep.record("kanev-symmetric", mk.is_symmetric());
    rep.record("kanev-degree", mk.row_sums().iter().all(|&s| s == td.deg_k));
    Ok(rep)
}

/// The three conditions `q = 1`, `M_K = 0` and `ρ_H ≅ trivial ⊕ W_1 ⊕ .. ⊕ W_r`
/// are equivalent; returns whether they agree here.
pub fn q_one_equivalence(
    g: &PermGroup,
    dc: &DoubleCosetData,
    ws: &[RationalIrrep],
    td: &TupleData,
    mk: &IntMatrix,
) -> bool {
    let perm = permutation_character(g, &dc.subgroup);
    let decomposes = perm
        .iter()
        .enumerate()
        .all(|(c, &v)| v == 1 + ws.iter().map(|w| w.trace_values[c]).sum::<i64>());
    let q_one = td.q == 1;
    q_one == mk.is_zero() && q_one == decomposes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::CharacterTable;
    use crate::group_spec::realize_group;

    struct Case {
        g: PermGroup,
        dc: DoubleCosetData,
        orbits: Vec<RationalIrrep>,
    }

    fn case(group: &str, pred: impl Fn(&crate::perm::Permutation) -> bool) -> Case {
        let g = realize_group(group, 10_000).unwrap();
        let h = g.subgroup_where(pred).unwrap();
        let dc = DoubleCosetData::new(&g, &h).unwrap();
        let orbits = CharacterTable::new(&g).unwrap().galois_orbits().unwrap();
        Case { g, dc, orbits }
    }

    fn by_degree(c: &Case, n: u64) -> RationalIrrep {
        c.orbits
            .iter()
            .find(|o| o.n == n && !o.is_trivial())
            .unwrap()
            .clone()
    }

    #[test]
    fn sym3_transposition() {
        let c = case("sym(3)", |p| p.apply(2) == 2);
        let std = by_degree(&c, 2);
        let a = coefficients_a(&c.g, &c.dc, &std).unwrap();
        assert_eq!(a, vec![2, -1]);
        let hr = HeckeRing::new(&c.g, &c.dc).unwrap();
        assert_eq!(hr.c[1][1], vec![2, 1]);
        assert!(idempotent_check(&hr, &a, 2, 6).is_ok());
        assert_eq!(idempotent_check(&hr, &[2, 0], 2, 6), Err(0));

        let td = tuple_data(&c.g, &c.dc, std::slice::from_ref(&std)).unwrap();
        assert_eq!((td.b1, td.b, td.q, td.deg_k), (2, 3, 1, 0));
        let third = |x: i64| BigRational::new(x.into(), 3.into());
        assert_eq!(kanev_form_values(&td, 0), vec![third(2), third(-1)]);

        let d = matrix_dbar(&c.g, &c.dc, &a);
        assert_eq!(d, IntMatrix::from_fn(3, |i, j| if i == j { 2 } else { -1 }));
        let mk = matrix_k(&c.g, &c.dc, &td).unwrap();
        assert!(mk.is_zero());
        let report = verify_matrix_identities(&td, &[d], &mk).unwrap();
        assert!(report.all_pass(), "{:?}", report.failures());
        assert!(q_one_equivalence(&c.g, &c.dc, &[std], &td, &mk));
    }

    #[test]
    fn sym4_point_stabilizer() {
        let c = case("sym(4)", |p| p.apply(3) == 3);
        // Of the two degree-3 characters only the standard one has dim V^H = 1.
        let std = c
            .orbits
            .iter()
            .find(|o| o.n == 3 && coefficients_a(&c.g, &c.dc, o).unwrap()[0] == 6)
            .cloned()
            .unwrap();
        assert_eq!(coefficients_a(&c.g, &c.dc, &std).unwrap(), vec![6, -2]);
        let td = tuple_data(&c.g, &c.dc, &[std]).unwrap();
        assert_eq!(td.q, 1);
    }

    #[test]
    fn ring_axioms_of_structure_constants() {
        let c = case("alt(5)", |p| p.apply(4) == 4);
        let hr = HeckeRing::new(&c.g, &c.dc).unwrap();
        let d = hr.dimension();
        let n = &c.dc.sizes;
        for i in 0..d {
            for j in 0..d {
                assert_eq!(hr.c[0][i][j], i64::from(i == j));
                assert_eq!(hr.c[i][0][j], i64::from(i == j));
                let s: i64 = (0..d).map(|k| hr.c[i][j][k] * n[k] as i64).sum();
                assert_eq!(s, (n[i] * n[j]) as i64);
            }
        }
        let whole = DoubleCosetData::new(&c.g, &c.g.whole()).unwrap();
        assert_eq!(HeckeRing::new(&c.g, &whole).unwrap().c, vec![vec![vec![1]]]);
    }

    #[test]
    fn trivial_representation() {
        let c = case("sym(4)", |p| p.apply(0) == 0 && p.apply(1) == 1);
        let triv = c.orbits.iter().find(|o| o.is_trivial()).unwrap();
        let a = coefficients_a(&c.g, &c.dc, triv).unwrap();
        assert!(a.iter().all(|&x| x == 2));
        let hr = HeckeRing::new(&c.g, &c.dc).unwrap();
        assert!(idempotent_check(&hr, &a, 1, 24).is_ok());
        let d = matrix_dbar(&c.g, &c.dc, &a);
        assert_eq!(d, IntMatrix::all_ones(12).checked_scale(2).unwrap());
    }

    #[test]
    fn alt5_pair_stabilizer() {
        let c = case("alt(5)", |p| p.apply(3) >= 3 && p.apply(4) >= 3);
        let w = by_degree(&c, 4);
        let td = tuple_data(&c.g, &c.dc, std::slice::from_ref(&w)).unwrap();
        assert_eq!((td.b, td.q, td.deg_k), (5, 3, 3));
        let mk = matrix_k(&c.g, &c.dc, &td).unwrap();
        assert_eq!(mk.size, 10);
        let a = coefficients_a(&c.g, &c.dc, &w).unwrap();
        let d = matrix_dbar(&c.g, &c.dc, &a);
        let report = verify_matrix_identities(&td, &[d], &mk).unwrap();
        assert!(report.all_pass(), "{:?}", report.failures());
        assert!(q_one_equivalence(&c.g, &c.dc, &[w], &td, &mk));
    }
}
