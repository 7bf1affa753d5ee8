//! Character tables over `Q(ζ_e)`, inner products, fixed-space dimensions and
//! rational irreducible representations (Galois orbits of characters).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cosets::right_cosets;
use crate::cyclotomic::Cyclotomic;
use crate::dixon::{irreducible_characters, ClassData};
use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};

/// A function on conjugacy classes, one value per class.
pub type ClassFunction = Vec<Cyclotomic>;

#[derive(Debug, Clone)]
pub struct ClassInfo {
    pub representative: usize,
    pub size: usize,
    pub element_order: u32,
    /// `power_map[t]` is the class of `representative^t`, for `t < e`.
    pub power_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<Cyclotomic>,
    pub degree: u64,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub order: usize,
    /// Exponent of the group; every value lives in `Q(ζ_exponent)`.
    pub exponent: u32,
    pub classes: Vec<ClassInfo>,
    /// Irreducible characters, trivial first, then by increasing degree.
    pub chars: Vec<Character>,
    /// Class of the inverse of each class.
    pub inverse_class: Vec<usize>,
}

/// A Galois orbit of irreducible characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalIrrep {
    /// Indices into [`CharacterTable::chars`], least first.
    pub orbit: Vec<usize>,
    /// Common degree of the orbit members.
    pub n: u64,
    /// `[K_V : Q]`, the orbit size.
    pub field_degree: usize,
    /// Units `k mod e` with `χ^(ζ ↦ ζ^k) = χ` for the first orbit member.
    pub field_stabilizer: Vec<u32>,
    /// Orbit sum of the characters at each class.
    pub trace_values: Vec<i64>,
}

impl RationalIrrep {
    pub fn is_trivial(&self) -> bool {
        self.n == 1 && self.trace_values.iter().all(|&v| v == 1)
    }

    /// Two orbits have the same character field iff their stabilizers agree.
    pub fn same_field(&self, other: &RationalIrrep) -> bool {
        self.field_stabilizer == other.field_stabilizer
    }
}

impl CharacterTable {
    pub fn new(g: &PermGroup) -> Result<Self> {
        let data = ClassData::new(g);
        let modular = irreducible_characters(g, &data)?;
        let e = g.exponent();
        let k = g.classes().len();

        let mut rows: Vec<(u64, Vec<Vec<i64>>)> =
            modular.degrees.into_iter().zip(modular.mult).collect();
        // Trivial character first, then by degree; ties by multiplicity data.
        rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
        verify_orthogonality(g.order() as i64, e, &data.sizes, &rows)?;

        let chars = rows
            .iter()
            .map(|(d, mult)| Character {
                degree: *d,
                values: mult
                    .iter()
                    .map(|m| Cyclotomic::from_integer_exponents(e, m))
                    .collect(),
            })
            .collect();
        let classes = g
            .classes()
            .iter()
            .enumerate()
            .map(|(j, c)| ClassInfo {
                representative: c.representative,
                size: c.size(),
                element_order: g.element_order(c.representative),
                power_map: data.power[j].clone(),
            })
            .collect();
        debug_assert_eq!(data.inverse.len(), k);
        Ok(CharacterTable {
            order: g.order(),
            exponent: e,
            classes,
            chars,
            inverse_class: data.inverse,
        })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// `(1/|G|) Σ_classes |C| a(C) conj(b(C))`; errors if the result is irrational.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<BigRational> {
        let mut acc = Cyclotomic::zero(self.exponent);
        for (c, info) in self.classes.iter().enumerate() {
            let term = &a[c] * &b[c].conj();
            acc = &acc + &term.scale(&BigRational::from_integer(info.size.into()));
        }
        let r = acc
            .as_rational()
            .ok_or_else(|| Error::InvalidArgument("inner product is not rational".into()))?;
        Ok(r / BigRational::from_integer(self.order.into()))
    }

    /// `dim V^H = (1/|H|) Σ_{h∈H} χ(h)`.
    pub fn fixed_space_dim(&self, g: &PermGroup, chi: &Character, h: &Subgroup) -> Result<u64> {
        let counts = g.class_distribution(h.elements());
        let mut acc = Cyclotomic::zero(self.exponent);
        for (c, &n) in counts.iter().enumerate() {
            if n != 0 {
                acc = &acc + &chi.values[c].scale(&BigRational::from_integer(n.into()));
            }
        }
        let total = acc
            .as_rational_integer()
            .map_err(|e| Error::fault(format!("character sum over a subgroup: {e}")))?;
        let (q, r) = total.div_rem(&BigInt::from(h.order()));
        if !r.is_zero() {
            return Err(Error::fault("fixed-space dimension is not an integer"));
        }
        q.to_u64()
            .ok_or_else(|| Error::fault("negative fixed-space dimension"))
    }

    /// `dim V^H` for any member of the orbit, from the integral trace values.
    pub fn orbit_fixed_dim(&self, g: &PermGroup, w: &RationalIrrep, h: &Subgroup) -> Result<u64> {
        let counts = g.class_distribution(h.elements());
        orbit_fixed_dim_from_counts(w, &counts, h.order())
    }

    /// Partition of the irreducible characters into Galois orbits.
    pub fn galois_orbits(&self) -> Result<Vec<RationalIrrep>> {
        let e = self.exponent;
        let units: Vec<u32> = (1..=e).filter(|k| k.gcd(&e) == 1).map(|k| k % e).collect();
        let index: HashMap<&[Cyclotomic], usize> = self
            .chars
            .iter()
            .enumerate()
            .map(|(i, c)| (c.values.as_slice(), i))
            .collect();
        let mut assigned = vec![false; self.chars.len()];
        let mut out = Vec::new();
        for (i, chi) in self.chars.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut stabilizer = Vec::new();
            for &k in &units {
                let image: Vec<Cyclotomic> = chi
                    .values
                    .iter()
                    .map(|v| v.galois_apply(k as i64))
                    .collect::<Result<_>>()?;
                let j = *index.get(image.as_slice()).ok_or_else(|| {
                    Error::fault("Galois image of a character is not in the table")
                })?;
                if j == i {
                    stabilizer.push(k);
                }
                if !orbit.contains(&j) {
                    orbit.push(j);
                }
            }
            orbit.sort_unstable();
            stabilizer.sort_unstable();
            let mut trace_values = Vec::with_capacity(self.classes.len());
            for c in 0..self.classes.len() {
                let mut s = Cyclotomic::zero(e);
                for &j in &orbit {
                    s = &s + &self.chars[j].values[c];
                }
                let v = s
                    .as_rational_integer()
                    .map_err(|err| Error::fault(format!("orbit trace: {err}")))?;
                trace_values.push(
                    v.to_i64()
                        .ok_or_else(|| Error::fault("trace value overflow"))?,
                );
            }
            for &j in &orbit {
                assigned[j] = true;
            }
            out.push(RationalIrrep {
                n: chi.degree,
                field_degree: orbit.len(),
                orbit,
                field_stabilizer: stabilizer,
                trace_values,
            });
        }
        Ok(out)
    }

    /// Integer class function lifted to cyclotomic values.
    pub fn to_class_function(&self, values: &[i64]) -> ClassFunction {
        values
            .iter()
            .map(|&v| Cyclotomic::from_integer(self.exponent, v))
            .collect()
    }
}

/// Trace route for `dim V^H`: `Σ_h tr χ(h) / (|H| [K_V:Q])`, with per-class
/// element counts of `H`.
pub fn orbit_fixed_dim_from_counts(
    w: &RationalIrrep,
    counts: &[u32],
    h_order: usize,
) -> Result<u64> {
    let total: i64 = counts
        .iter()
        .zip(&w.trace_values)
        .map(|(&n, &t)| n as i64 * t)
        .sum();
    let denom = (h_order * w.field_degree) as i64;
    if total < 0 || total % denom != 0 {
        return Err(Error::fault(
            "trace sum over a subgroup is not a multiple of |H|[K:Q]",
        ));
    }
    Ok((total / denom) as u64)
}

/// Number of right cosets `Hx` fixed by each class representative.
pub fn permutation_character(g: &PermGroup, h: &Subgroup) -> Vec<i64> {
    let rc = right_cosets(g, h);
    g.classes()
        .iter()
        .map(|c| {
            rc.reps
                .iter()
                .filter(|&&x| h.contains(g.conjugate(c.representative, x)))
                .count() as i64
        })
        .collect()
}

/// Exact row orthogonality from eigenvalue multiplicities.
fn verify_orthogonality(
    order: i64,
    e: u32,
    sizes: &[u64],
    rows: &[(u64, Vec<Vec<i64>>)],
) -> Result<()> {
    let sparse: Vec<Vec<Vec<(usize, i64)>>> = rows
        .iter()
        .map(|(_, mult)| {
            mult.iter()
                .map(|m| {
                    m.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(s, &c)| (s, c))
                        .collect()
                })
                .collect()
        })
        .collect();
    let degree_sum: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if degree_sum != order as u64 {
        return Err(Error::fault(
            "squared degrees do not sum to the group order",
        ));
    }
    let e_us = e as usize;
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let mut acc = vec![0i64; e_us];
            for (c, &size) in sizes.iter().enumerate() {
                for &(s, a) in &sparse[i][c] {
                    for &(t, b) in &sparse[j][c] {
                        acc[(s + e_us - t) % e_us] += size as i64 * a * b;
                    }
                }
            }
            let value = Cyclotomic::from_integer_exponents(e, &acc);
            let expected = Cyclotomic::from_integer(e, if i == j { order } else { 0 });
            if value != expected {
                return Err(Error::fault(format!(
                    "characters {i} and {j} fail orthogonality"
                )));
            }
        }
    }
    Ok(())
}
