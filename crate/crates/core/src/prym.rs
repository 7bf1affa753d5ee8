//! Hypothesis checks, admissible branch classes, signature search with a
//! realizability backtracker, and Prym-Tyurin reports.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{orbit_fixed_dim_from_counts, CharacterTable, RationalIrrep};
use crate::cosets::{mixed_count_with, right_cosets, DoubleCosetData, RightCosets};
use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};
use crate::hecke::{
    coefficients_a, matrix_dbar, matrix_k, q_one_equivalence, tuple_data, verify_matrix_identities,
    TupleData, VerificationReport,
};
use crate::lattice::{
    cyclic_subgroup_classes, minimal_overgroups, subgroups_up_to_conjugacy, CyclicClass,
};

/// Everything computed once per group.
#[derive(Debug, Clone)]
pub struct GroupContext {
    pub group: PermGroup,
    pub table: CharacterTable,
    pub irreps: Vec<RationalIrrep>,
    pub cyclic: Vec<CyclicClass>,
    /// Cyclic class of `<x>` for each element; `usize::MAX` at the identity.
    pub cyclic_class_of: Vec<usize>,
}

impl GroupContext {
    pub fn new(group: PermGroup) -> Result<Self> {
        let table = CharacterTable::new(&group)?;
        let irreps = table.galois_orbits()?;
        let cyclic = cyclic_subgroup_classes(&group);
        let mut cyclic_class_of = vec![usize::MAX; group.order()];
        for (j, c) in cyclic.iter().enumerate() {
            for &x in &c.generators {
                cyclic_class_of[x] = j;
            }
        }
        Ok(GroupContext {
            group,
            table,
            irreps,
            cyclic,
            cyclic_class_of,
        })
    }

    /// Indices of the nontrivial rational irreducible representations.
    pub fn nontrivial_irreps(&self) -> Vec<usize> {
        (0..self.irreps.len())
            .filter(|&i| !self.irreps[i].is_trivial())
            .collect()
    }

    /// `dim V^K` for the given irrep and subgroup.
    pub fn fixed_dim(&self, irrep: usize, k: &Subgroup) -> Result<u64> {
        let counts = self.group.class_distribution(k.elements());
        orbit_fixed_dim_from_counts(&self.irreps[irrep], &counts, k.order())
    }

    /// Names like `C3`, `C6`, `C6'`, numbered within each order.
    pub fn class_labels(&self) -> Vec<String> {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        self.cyclic
            .iter()
            .map(|c| {
                let k = seen.entry(c.order).or_insert(0);
                let label = format!("C{}{}", c.order, "'".repeat(*k));
                *k += 1;
                label
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "item", rename_all = "kebab-case")]
pub enum HypothesisFailure {
    /// a) the representations have different degrees.
    UnequalDegrees { degrees: Vec<u64> },
    /// b) the character fields differ.
    UnequalFields,
    /// c) a representation has `dim V^H != 1`.
    FixedDimension { rep: usize, dim: u64 },
    /// d) an overgroup keeps every representation's fixed space nonzero.
    NotMaximal {
        overgroup_order: usize,
        overgroup_generators: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub subgroup_order: usize,
    pub reps: Vec<usize>,
    pub pass: bool,
    pub failures: Vec<HypothesisFailure>,
}

/// Checks items a) to d) for `(G, H, reps)`; `reps` index `ctx.irreps`.
pub fn check_hypothesis(
    ctx: &GroupContext,
    h: &Subgroup,
    reps: &[usize],
) -> Result<HypothesisReport> {
    validate_reps(ctx, reps)?;
    let ws: Vec<&RationalIrrep> = reps.iter().map(|&i| &ctx.irreps[i]).collect();
    let mut failures = Vec::new();
    if ws.iter().any(|w| w.n != ws[0].n) {
        failures.push(HypothesisFailure::UnequalDegrees {
            degrees: ws.iter().map(|w| w.n).collect(),
        });
    }
    if ws.iter().any(|w| !w.same_field(ws[0])) {
        failures.push(HypothesisFailure::UnequalFields);
    }
    for &i in reps {
        let dim = ctx.fixed_dim(i, h)?;
        if dim != 1 {
            failures.push(HypothesisFailure::FixedDimension { rep: i, dim });
        }
    }
    if h.order() < ctx.group.order() {
        for n in minimal_overgroups(&ctx.group, h)? {
            let mut keeps_all = true;
            for &i in reps {
                if ctx.fixed_dim(i, &n)? == 0 {
                    keeps_all = false;
                    break;
                }
            }
            if keeps_all {
                failures.push(HypothesisFailure::NotMaximal {
                    overgroup_order: n.order(),
                    overgroup_generators: n
                        .generators()
                        .iter()
                        .map(|&x| ctx.group.element(x).to_string())
                        .collect(),
                });
            }
        }
    }
    Ok(HypothesisReport {
        subgroup_order: h.order(),
        reps: reps.to_vec(),
        pass: failures.is_empty(),
        failures,
    })
}

fn validate_reps(ctx: &GroupContext, reps: &[usize]) -> Result<()> {
    if reps.is_empty() {
        return Err(Error::InvalidArgument("no representations given".into()));
    }
    for (k, &i) in reps.iter().enumerate() {
        let w = ctx.irreps.get(i).ok_or_else(|| {
            Error::InvalidArgument(format!("no rational irreducible representation {i}"))
        })?;
        if w.is_trivial() {
            return Err(Error::InvalidArgument(
                "the trivial representation is not allowed".into(),
            ));
        }
        if reps[..k].contains(&i) {
            return Err(Error::InvalidArgument(format!(
                "representation {i} listed twice"
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityRow {
    /// Index into `ctx.cyclic`.
    pub class: usize,
    pub label: String,
    pub class_order: usize,
    /// Number of conjugate subgroups in the class.
    pub class_size: usize,
    /// Fixed-point contribution of one branch point of this class.
    pub a: i64,
    /// `|H\G/G_j|`.
    pub mixed_cosets: usize,
    /// `dim V_i^{G_j}` per representation.
    pub fixed_dims: Vec<u64>,
    /// Whether the conjugates of `G_j` generate `G`.
    pub generates: bool,
}

impl AdmissibilityRow {
    pub fn admissible(&self) -> bool {
        self.a == 0
    }
}

/// One row per cyclic class with `A_j = q[L:Q] Σ_i (n - dim V_i^{G_j}) - ([G:H] - |H\G/G_j|)`.
pub fn admissibility_table(
    ctx: &GroupContext,
    h: &Subgroup,
    reps: &[usize],
    td: &TupleData,
) -> Result<Vec<AdmissibilityRow>> {
    let rc = right_cosets(&ctx.group, h);
    let labels = ctx.class_labels();
    let whole = ctx.group.order();
    ctx.cyclic
        .iter()
        .enumerate()
        .map(|(j, class)| {
            let gj = &class.representative;
            let fixed_dims: Vec<u64> = reps
                .iter()
                .map(|&i| ctx.fixed_dim(i, gj))
                .collect::<Result<_>>()?;
            let mixed = mixed_count_with(&ctx.group, &rc, gj);
            let deficit: i64 = fixed_dims.iter().map(|&d| td.n as i64 - d as i64).sum();
            let a = td.q * td.field_degree as i64 * deficit - (td.index as i64 - mixed as i64);
            Ok(AdmissibilityRow {
                class: j,
                label: labels[j].clone(),
                class_order: class.order,
                class_size: class.member_count,
                a,
                mixed_cosets: mixed,
                fixed_dims,
                generates: ctx.group.normal_closure(gj).order() == whole,
            })
        })
        .collect()
}

/// `[0; (C_1, m_1), .., (C_t, m_t)]` over a genus-0 base.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeometricSignature {
    /// `(cyclic class index, multiplicity)`, classes distinct, multiplicities positive.
    pub entries: Vec<(usize, u32)>,
}

impl GeometricSignature {
    pub fn new(mut entries: Vec<(usize, u32)>) -> Result<Self> {
        entries.retain(|&(_, m)| m > 0);
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidArgument("signature repeats a class".into()));
        }
        Ok(GeometricSignature { entries })
    }

    pub fn branch_points(&self) -> u32 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity(&self, class: usize) -> u32 {
        self.entries
            .iter()
            .find(|&&(c, _)| c == class)
            .map_or(0, |&(_, m)| m)
    }
}

fn row_for(rows: &[AdmissibilityRow], class: usize) -> Result<&AdmissibilityRow> {
    rows.iter()
        .find(|r| r.class == class)
        .ok_or_else(|| Error::InvalidArgument(format!("signature uses unknown class {class}")))
}

/// `2 g(X)`, always an integer.
fn twice_genus(sig: &GeometricSignature, rows: &[AdmissibilityRow], index: usize) -> Result<i64> {
    let mut s = 2 - 2 * index as i64;
    for &(c, m) in &sig.entries {
        s += m as i64 * (index as i64 - row_for(rows, c)?.mixed_cosets as i64);
    }
    Ok(s)
}

/// `2 dim P`, always an integer.
fn twice_dim(sig: &GeometricSignature, rows: &[AdmissibilityRow], td: &TupleData) -> Result<i64> {
    let mut s = 0i64;
    for i in 0..td.r {
        let mut inner = -2 * td.n as i64;
        for &(c, m) in &sig.entries {
            inner += m as i64 * (td.n as i64 - row_for(rows, c)?.fixed_dims[i] as i64);
        }
        s += inner;
    }
    Ok(td.field_degree as i64 * s)
}

fn halve(x: i64, what: &str) -> Result<i64> {
    if x % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "{what} is not an integer for this signature"
        )));
    }
    Ok(x / 2)
}

/// `g(X) = 1 - [G:H] + ½ Σ m_j ([G:H] - |H\G/G_j|)`.
pub fn genus_quotient(
    sig: &GeometricSignature,
    rows: &[AdmissibilityRow],
    index: usize,
) -> Result<i64> {
    halve(twice_genus(sig, rows, index)?, "the genus of X")
}

/// `dim P = [L:Q] Σ_i (½ Σ_j m_j (n - dim V_i^{G_j}) - n)`.
pub fn dim_prym(
    sig: &GeometricSignature,
    rows: &[AdmissibilityRow],
    td: &TupleData,
) -> Result<i64> {
    halve(twice_dim(sig, rows, td)?, "the Prym dimension")
}

/// Number of fixed points of the Kanev correspondence, `Σ m_j A_j`.
pub fn fixed_points(sig: &GeometricSignature, rows: &[AdmissibilityRow]) -> Result<i64> {
    sig.entries
        .iter()
        .map(|&(c, m)| Ok(m as i64 * row_for(rows, c)?.a))
        .sum()
}

/// `q dim P = g(X) + [G:H] - 1 - (r|G|/b)[L:Q] + ½ (fixed points)`, checked on
/// doubled quantities so that it applies to every signature.
pub fn crosscheck_dim(
    sig: &GeometricSignature,
    rows: &[AdmissibilityRow],
    td: &TupleData,
) -> Result<bool> {
    let lhs = td.q * twice_dim(sig, rows, td)?;
    let rhs = twice_genus(sig, rows, td.index)? + 2 * td.index as i64
        - 2
        - 2 * (td.r * td.group_order * td.field_degree) as i64 / td.b
        + fixed_points(sig, rows)?;
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "witness", rename_all = "lowercase")]
pub enum Realizability {
    /// A generating tuple with product one, as element indices.
    Yes(Vec<usize>),
    No,
    Unknown,
}

impl Realizability {
    pub fn label(&self) -> &'static str {
        match self {
            Realizability::Yes(_) => "yes",
            Realizability::No => "no",
            Realizability::Unknown => "unknown",
        }
    }
}

/// Searches for `(g_1, .., g_s)` with `<g_k>` in the prescribed classes,
/// `g_1 ⋯ g_s = 1` and `<g_1, .., g_s> = G`. Gives up with `Unknown` after
/// `node_budget` search nodes.
pub fn find_generating_tuple(
    ctx: &GroupContext,
    sig: &GeometricSignature,
    node_budget: u64,
) -> Realizability {
    let g = &ctx.group;
    let slots: Vec<usize> = sig
        .entries
        .iter()
        .flat_map(|&(c, m)| std::iter::repeat_n(c, m as usize))
        .collect();
    if slots.is_empty() {
        return if g.order() == 1 {
            Realizability::Yes(Vec::new())
        } else {
            Realizability::No
        };
    }
    if slots.iter().any(|&c| c >= ctx.cyclic.len()) {
        return Realizability::No;
    }
    let firsts: Vec<usize> = sig
        .entries
        .iter()
        .map(|&(c, _)| ctx.cyclic[c].generator())
        .collect();
    if g.normal_closure(&g.closure(&firsts)).order() != g.order() {
        return Realizability::No;
    }
    if slots.len() == 1 {
        return Realizability::No;
    }
    // Conjugating the whole tuple lets the first entry be a class representative.
    let first: Vec<usize> = ctx.cyclic[slots[0]]
        .generators
        .iter()
        .copied()
        .filter(|&x| g.classes()[g.class_of(x)].representative == x)
        .collect();
    let mut search = Backtrack {
        ctx,
        slots: &slots,
        chosen: Vec::with_capacity(slots.len()),
        nodes: 0,
        budget: node_budget,
        exhausted: false,
    };
    for x in first {
        search.chosen.push(x);
        if let Some(w) = search.extend(x) {
            return Realizability::Yes(w);
        }
        search.chosen.pop();
        if search.exhausted {
            return Realizability::Unknown;
        }
    }
    Realizability::No
}

struct Backtrack<'a> {
    ctx: &'a GroupContext,
    slots: &'a [usize],
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Backtrack<'_> {
    fn extend(&mut self, product: usize) -> Option<Vec<usize>> {
        let g = &self.ctx.group;
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return None;
        }
        let depth = self.chosen.len();
        if depth + 1 == self.slots.len() {
            let last = g.inv(product);
            if self.ctx.cyclic_class_of[last] != self.slots[depth] {
                return None;
            }
            self.chosen.push(last);
            let found = (g.closure(&self.chosen).order() == g.order()).then(|| self.chosen.clone());
            self.chosen.pop();
            return found;
        }
        for &x in &self.ctx.cyclic[self.slots[depth]].generators {
            self.chosen.push(x);
            let r = self.extend(g.mul(product, x));
            self.chosen.pop();
            if r.is_some() || self.exhausted {
                return r;
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub index_cap: usize,
    pub max_r: usize,
    pub max_branch_points: u32,
    pub node_budget: u64,
    pub work_cap: usize,
    /// Also list signatures that balance positive and negative `A_j`; never certified.
    pub allow_mixed: bool,
    pub verify_identities: bool,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            index_cap: usize::MAX,
            max_r: 2,
            max_branch_points: 6,
            node_budget: 200_000,
            work_cap: crate::lattice::DEFAULT_WORK_CAP,
            allow_mixed: false,
            verify_identities: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrymReport {
    pub signature: GeometricSignature,
    pub q: i64,
    pub deg_k: i64,
    pub genus_x: i64,
    pub dim_p: i64,
    pub fixed_points: i64,
    pub realizable: Realizability,
    pub identities_pass: bool,
    pub crosscheck: bool,
    /// Valid Prym-Tyurin certificate.
    pub certified: bool,
}

/// Everything needed to report on one triple `(G, H, reps)`.
#[derive(Debug, Clone)]
pub struct Triple {
    pub subgroup: Subgroup,
    pub reps: Vec<usize>,
    pub dc: DoubleCosetData,
    pub tuple: TupleData,
    pub identities: VerificationReport,
}

impl Triple {
    /// Builds and verifies the triple; the hypothesis must already hold.
    pub fn new(ctx: &GroupContext, h: &Subgroup, reps: &[usize]) -> Result<Self> {
        let g = &ctx.group;
        let dc = DoubleCosetData::new(g, h)?;
        let ws: Vec<RationalIrrep> = reps.iter().map(|&i| ctx.irreps[i].clone()).collect();
        let tuple = tuple_data(g, &dc, &ws)?;
        let identities = verify_triple(g, &dc, &ws, &tuple)?;
        Ok(Triple {
            subgroup: h.clone(),
            reps: reps.to_vec(),
            dc,
            tuple,
            identities,
        })
    }
}

fn verify_triple(
    g: &PermGroup,
    dc: &DoubleCosetData,
    ws: &[RationalIrrep],
    td: &TupleData,
) -> Result<VerificationReport> {
    let blocks: Vec<_> = ws
        .iter()
        .map(|w| Ok(matrix_dbar(g, dc, &coefficients_a(g, dc, w)?)))
        .collect::<Result<_>>()?;
    let mk = matrix_k(g, dc, td)?;
    let mut report = verify_matrix_identities(td, &blocks, &mk)?;
    report.checks.push(crate::hecke::IdentityCheck {
        name: "q-one-equivalence".into(),
        pass: q_one_equivalence(g, dc, ws, td, &mk),
    });
    Ok(report)
}

/// Enumerates signatures supported on admissible classes (or, with
/// `allow_mixed`, balanced signatures on any classes), keeps those accepted by
/// `filter`, and reports on each. Certified reports need `dim P >= 1`,
/// no fixed points, passing identities and realizability other than `No`.
pub fn search_signatures(
    ctx: &GroupContext,
    triple: &Triple,
    rows: &[AdmissibilityRow],
    bounds: &SearchBounds,
    filter: &(dyn Fn(&GeometricSignature) -> bool + Sync),
) -> Result<Vec<PrymReport>> {
    let support: Vec<&AdmissibilityRow> = rows
        .iter()
        .filter(|r| r.admissible() || bounds.allow_mixed)
        .collect();
    let mut candidates = Vec::new();
    let mut mult = vec![0u32; support.len()];
    enumerate_multiplicities(&mut mult, 0, bounds.max_branch_points, &mut |m| {
        let entries = support.iter().zip(m).map(|(r, &k)| (r.class, k)).collect();
        candidates.push(GeometricSignature::new(entries).expect("distinct classes"));
    });
    let td = &triple.tuple;
    let identities_pass = triple.identities.all_pass();
    let mut reports: Vec<PrymReport> = candidates
        .into_par_iter()
        .filter(|sig| sig.branch_points() > 0 && filter(sig))
        .map(|sig| -> Result<Option<PrymReport>> {
            let fixed = fixed_points(&sig, rows)?;
            if fixed != 0 {
                return Ok(None);
            }
            let (Ok(genus_x), Ok(dim_p)) = (
                genus_quotient(&sig, rows, td.index),
                dim_prym(&sig, rows, td),
            ) else {
                return Ok(None);
            };
            if dim_p < 1 {
                return Ok(None);
            }
            let crosscheck = crosscheck_dim(&sig, rows, td)?;
            let realizable = find_generating_tuple(ctx, &sig, bounds.node_budget);
            if realizable == Realizability::No {
                return Ok(None);
            }
            let all_admissible = sig.entries.iter().all(|&(c, _)| rows[c].admissible());
            Ok(Some(PrymReport {
                q: td.q,
                deg_k: td.deg_k,
                genus_x,
                dim_p,
                fixed_points: fixed,
                identities_pass,
                crosscheck,
                certified: identities_pass && crosscheck && all_admissible,
                realizable,
                signature: sig,
            }))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;
    reports.sort_by(|a, b| {
        (a.dim_p, a.signature.branch_points(), &a.signature).cmp(&(
            b.dim_p,
            b.signature.branch_points(),
            &b.signature,
        ))
    });
    Ok(reports)
}

fn enumerate_multiplicities(
    m: &mut Vec<u32>,
    k: usize,
    remaining: u32,
    visit: &mut dyn FnMut(&[u32]),
) {
    if k == m.len() {
        visit(m);
        return;
    }
    for v in 0..=remaining {
        m[k] = v;
        enumerate_multiplicities(m, k + 1, remaining - v, visit);
    }
    m[k] = 0;
}

#[derive(Debug, Clone)]
pub struct ScanTriple {
    pub hypothesis: HypothesisReport,
    pub triple: Triple,
}

#[derive(Debug, Clone)]
pub struct ScanResult {
    pub triples: Vec<ScanTriple>,
    /// False when subgroup enumeration hit its work cap.
    pub complete: bool,
}

/// All passing triples over the conjugacy classes of subgroups.
pub fn scan(ctx: &GroupContext, bounds: &SearchBounds) -> Result<ScanResult> {
    let classes = subgroups_up_to_conjugacy(&ctx.group, bounds.index_cap, bounds.work_cap);
    let triples = scan_subgroups(ctx, &classes.subgroups, bounds)?;
    Ok(ScanResult {
        triples,
        complete: classes.complete,
    })
}

/// Passing triples for the given subgroups, in input order and then by
/// representation indices.
pub fn scan_subgroups(
    ctx: &GroupContext,
    subgroups: &[Subgroup],
    bounds: &SearchBounds,
) -> Result<Vec<ScanTriple>> {
    let per: Vec<Vec<ScanTriple>> = subgroups
        .par_iter()
        .map(|h| scan_one(ctx, h, bounds))
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

fn scan_one(ctx: &GroupContext, h: &Subgroup, bounds: &SearchBounds) -> Result<Vec<ScanTriple>> {
    let g = &ctx.group;
    if h.order() == g.order() {
        return Ok(Vec::new());
    }
    let mut candidates = Vec::new();
    for i in ctx.nontrivial_irreps() {
        if ctx.fixed_dim(i, h)? == 1 {
            candidates.push(i);
        }
    }
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let overgroups = minimal_overgroups(g, h)?;
    // kills[k][o]: representation candidates[k] has no fixed vector on overgroup o.
    let kills: Vec<FixedBitSet> = candidates
        .iter()
        .map(|&i| {
            let mut bits = FixedBitSet::with_capacity(overgroups.len());
            for (o, n) in overgroups.iter().enumerate() {
                if ctx.fixed_dim(i, n)? == 0 {
                    bits.insert(o);
                }
            }
            Ok(bits)
        })
        .collect::<Result<_>>()?;

    let mut groups: BTreeMap<(u64, Vec<u32>), Vec<usize>> = BTreeMap::new();
    for (k, &i) in candidates.iter().enumerate() {
        let w = &ctx.irreps[i];
        groups
            .entry((w.n, w.field_stabilizer.clone()))
            .or_default()
            .push(k);
    }
    let mut out = Vec::new();
    for members in groups.values() {
        for subset in subsets_up_to(members, bounds.max_r) {
            let mut covered = FixedBitSet::with_capacity(overgroups.len());
            for &k in &subset {
                covered.union_with(&kills[k]);
            }
            if covered.count_ones(..) != overgroups.len() {
                continue;
            }
            let reps: Vec<usize> = subset.iter().map(|&k| candidates[k]).collect();
            let hypothesis = check_hypothesis(ctx, h, &reps)?;
            if !hypothesis.pass {
                return Err(Error::fault("scan filter and hypothesis check disagree"));
            }
            let triple = if bounds.verify_identities {
                Triple::new(ctx, h, &reps)?
            } else {
                let dc = DoubleCosetData::new(g, h)?;
                let ws: Vec<RationalIrrep> = reps.iter().map(|&i| ctx.irreps[i].clone()).collect();
                let tuple = tuple_data(g, &dc, &ws)?;
                Triple {
                    subgroup: h.clone(),
                    reps: reps.clone(),
                    dc,
                    tuple,
                    identities: VerificationReport::default(),
                }
            };
            out.push(ScanTriple { hypothesis, triple });
        }
    }
    out.sort_by(|a, b| a.triple.reps.cmp(&b.triple.reps));
    Ok(out)
}

/// Nonempty subsets of `items` with at most `max` elements, in lexicographic order.
fn subsets_up_to(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    fn go(
        items: &[usize],
        start: usize,
        max: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for i in start..items.len() {
            cur.push(items[i]);
            out.push(cur.clone());
            if cur.len() < max {
                go(items, i + 1, max, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, max, &mut Vec::new(), &mut out);
    out
}

/// Right cosets of `H`, exposed for callers building their own tables.
pub fn cosets_of(ctx: &GroupContext, h: &Subgroup) -> RightCosets {
    right_cosets(&ctx.group, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_spec::realize_group;

    fn ctx(text: &str) -> GroupContext {
        GroupContext::new(realize_group(text, 10_000).unwrap()).unwrap()
    }

    fn irrep_of_degree(ctx: &GroupContext, n: u64) -> usize {
        (0..ctx.irreps.len())
            .find(|&i| ctx.irreps[i].n == n)
            .unwrap()
    }

    fn pair_stabilizer(ctx: &GroupContext) -> Subgroup {
        ctx.group
            .subgroup_where(|p| p.apply(3) >= 3 && p.apply(4) >= 3)
            .unwrap()
    }

    #[test]
    fn hypothesis_examples() {
        let a5 = ctx("alt(5)");
        let h = pair_stabilizer(&a5);
        let w4 = irrep_of_degree(&a5, 4);
        assert!(check_hypothesis(&a5, &h, &[w4]).unwrap().pass);

        let s3 = ctx("sym(3)");
        let a3 = s3.group.subgroup_where(|p| p.sign() == 1).unwrap();
        let std = irrep_of_degree(&s3, 2);
        let report = check_hypothesis(&s3, &a3, &[std]).unwrap();
        assert!(!report.pass);
        assert!(matches!(
            report.failures[0],
            HypothesisFailure::FixedDimension { dim: 0, .. }
        ));
        assert!(check_hypothesis(&s3, &a3, &[0]).is_err());
    }

    #[test]
    fn failing_maximality_means_overgroup_passes_fixed_dimension() {
        let s4 = ctx("sym(4)");
        let subgroups = subgroups_up_to_conjugacy(&s4.group, usize::MAX, usize::MAX).subgroups;
        let mut seen = 0;
        for h in &subgroups {
            for i in s4.nontrivial_irreps() {
                if s4.fixed_dim(i, h).unwrap() != 1 {
                    continue;
                }
                let report = check_hypothesis(&s4, h, &[i]).unwrap();
                for n in minimal_overgroups(&s4.group, h).unwrap() {
                    if s4.fixed_dim(i, &n).unwrap() > 0 {
                        seen += 1;
                        assert!(!report.pass);
                        assert_eq!(s4.fixed_dim(i, &n).unwrap(), 1);
                        assert!(check_hypothesis(&s4, &n, &[i])
                            .unwrap()
                            .failures
                            .iter()
                            .all(|f| !matches!(f, HypothesisFailure::FixedDimension { .. })));
                    }
                }
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn alt5_admissibility_and_dimensions() {
        let a5 = ctx("alt(5)");
        let h = pair_stabilizer(&a5);
        let w4 = irrep_of_degree(&a5, 4);
        let triple = Triple::new(&a5, &h, &[w4]).unwrap();
        assert!(
            triple.identities.all_pass(),
            "{:?}",
            triple.identities.failures()
        );
        let rows = admissibility_table(&a5, &h, &[w4], &triple.tuple).unwrap();
        let c3 = rows.iter().find(|r| r.class_order == 3).unwrap();
        assert_eq!((c3.a, c3.mixed_cosets, c3.fixed_dims[0]), (0, 4, 2));
        assert!(c3.generates);
        for m in 1..10u32 {
            let sig = GeometricSignature::new(vec![(c3.class, m)]).unwrap();
            assert_eq!(genus_quotient(&sig, &rows, 10).unwrap(), 3 * m as i64 - 9);
            assert_eq!(dim_prym(&sig, &rows, &triple.tuple).unwrap(), m as i64 - 4);
            assert!(crosscheck_dim(&sig, &rows, &triple.tuple).unwrap());
        }
        let empty = GeometricSignature::new(vec![]).unwrap();
        assert_eq!(genus_quotient(&empty, &rows, 10).unwrap(), -9);
        // The identity holds for every signature, admissible or not.
        for r in &rows {
            let sig = GeometricSignature::new(vec![(c3.class, 5), (r.class, 2)]).ok();
            if let Some(sig) = sig {
                assert!(crosscheck_dim(&sig, &rows, &triple.tuple).unwrap());
            }
        }
    }

    #[test]
    fn realizability_in_alt5() {
        let a5 = ctx("alt(5)");
        let c3 = a5.cyclic.iter().position(|c| c.order == 3).unwrap();
        let sig = GeometricSignature::new(vec![(c3, 3)]).unwrap();
        assert_eq!(
            find_generating_tuple(&a5, &sig, u64::MAX),
            Realizability::No
        );
        let sig = GeometricSignature::new(vec![(c3, 4)]).unwrap();
        let Realizability::Yes(w) = find_generating_tuple(&a5, &sig, u64::MAX) else {
            panic!("four 3-cycles should generate");
        };
        let product = w
            .iter()
            .fold(a5.group.identity(), |p, &x| a5.group.mul(p, x));
        assert_eq!(product, a5.group.identity());
        assert_eq!(a5.group.closure(&w).order(), 60);
        assert_eq!(find_generating_tuple(&a5, &sig, 1), Realizability::Unknown);

        let s3 = ctx("sym(3)");
        let c3 = s3.cyclic.iter().position(|c| c.order == 3).unwrap();
        let sig = GeometricSignature::new(vec![(c3, 4)]).unwrap();
        assert_eq!(
            find_generating_tuple(&s3, &sig, u64::MAX),
            Realizability::No
        );
    }

    #[test]
    fn alt5_signature_search() {
        let a5 = ctx("alt(5)");
        let h = pair_stabilizer(&a5);
        let w4 = irrep_of_degree(&a5, 4);
        let triple = Triple::new(&a5, &h, &[w4]).unwrap();
        let rows = admissibility_table(&a5, &h, &[w4], &triple.tuple).unwrap();
        let bounds = SearchBounds {
            max_branch_points: 6,
            ..SearchBounds::default()
        };
        let reports = search_signatures(&a5, &triple, &rows, &bounds, &|_| true).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert_eq!(r.q, 3);
            assert_eq!(r.dim_p, r.signature.branch_points() as i64 - 4);
            assert!(r.certified && r.crosscheck);
        }
        let tight = SearchBounds {
            max_branch_points: 4,
            ..bounds
        };
        assert!(search_signatures(&a5, &triple, &rows, &tight, &|_| true)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn sym3_scan_gives_exponent_one() {
        let s3 = ctx("sym(3)");
        let result = scan(&s3, &SearchBounds::default()).unwrap();
        assert!(result.complete);
        assert!(!result.triples.is_empty());
        for t in &result.triples {
            assert_eq!(t.triple.tuple.q, 1);
            assert!(t.triple.identities.all_pass());
        }
    }

    #[test]
    fn class_labels_mark_repeated_orders() {
        let a5 = ctx("alt(5)");
        assert_eq!(a5.class_labels(), vec!["C2", "C3", "C5"]);
    }
}
