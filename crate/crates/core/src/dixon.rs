//! Dixon-Schneider: irreducible characters modulo a prime from common
//! eigenvectors of the class matrices, lifted back to cyclotomic integers.

use crate::error::{Error, Result};
use crate::group::PermGroup;

type Mat = Vec<Vec<u64>>;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least prime `p ≡ 1 (mod e)` with `p > 2√order`.
pub(crate) fn choose_prime(e: u64, order: u64) -> u64 {
    let mut p = e + 1;
    while !(is_prime(p) && (p * p > 4 * order)) {
        p += e;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Row-reduces in place; returns pivot columns of the nonzero rows, which are kept first.
fn rref(m: &mut Mat, p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, i);
        let inv = inv_mod(m[r][c], p);
        for x in &mut m[r] {
            *x = *x * inv % p;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of the right nullspace `{v : m v = 0}`.
fn nullspace(mut m: Mat, p: u64) -> Mat {
    let n = m.first().map_or(0, Vec::len);
    let pivots = rref(&mut m, p);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = (p - row[free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial (lowest degree first) via Hessenberg reduction.
fn charpoly(mut h: Mat, p: u64) -> Vec<u64> {
    let n = h.len();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for r in j + 2..n {
            let u = h[r][j] * inv % p;
            if u == 0 {
                continue;
            }
            let pivot = h[j + 1].clone();
            for (x, y) in h[r].iter_mut().zip(&pivot) {
                *x = (*x + (p - u) * y) % p;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + u * row[r]) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut pk = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            pk[i + 1] = (pk[i + 1] + c) % p;
            pk[i] = (pk[i] + (p - h[k - 1][k - 1]) * c) % p;
        }
        let mut t = 1u64;
        for i in 1..k {
            t = t * h[k - i][k - i - 1] % p;
            let f = t * h[k - i - 1][k - 1] % p;
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[k - i - 1].iter().enumerate() {
                pk[d] = (pk[d] + (p - f) * c) % p;
            }
        }
        polys.push(pk);
    }
    polys.pop().expect("nonempty")
}

fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}

/// Class-wise data shared by the modular stage and the lift.
pub(crate) struct ClassData {
    pub sizes: Vec<u64>,
    pub inverse: Vec<usize>,
    /// `power[j][t]` is the class of `rep_j^t` for `t < e`.
    pub power: Vec<Vec<usize>>,
}

impl ClassData {
    pub fn new(g: &PermGroup) -> Self {
        let e = g.exponent() as u64;
        let classes = g.classes();
        ClassData {
            sizes: classes.iter().map(|c| c.size() as u64).collect(),
            inverse: classes
                .iter()
                .map(|c| g.class_of(g.inv(c.representative)))
                .collect(),
            power: classes
                .iter()
                .map(|c| {
                    let mut out = Vec::with_capacity(e as usize);
                    let mut x = g.identity();
                    for _ in 0..e {
                        out.push(g.class_of(x));
                        x = g.mul(x, c.representative);
                    }
                    out
                })
                .collect(),
        }
    }
}

/// `counts[j][k][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}` for class representatives `z_l`.
fn class_matrices(g: &PermGroup) -> Vec<Vec<Vec<u64>>> {
    let k = g.classes().len();
    let mut counts = vec![vec![vec![0u64; k]; k]; k];
    for (l, c) in g.classes().iter().enumerate() {
        let z = c.representative;
        for x in 0..g.order() {
            let j = g.class_of(x);
            let kk = g.class_of(g.mul(g.inv(x), z));
            counts[j][kk][l] += 1;
        }
    }
    counts
}

/// Irreducible characters as multiplicity vectors: `mult[c][s]` is the
/// multiplicity of `ζ_e^s` among the eigenvalues at class `c`.
pub(crate) struct ModularTable {
    pub degrees: Vec<u64>,
    pub mult: Vec<Vec<Vec<i64>>>,
}

pub(crate) fn irreducible_characters(g: &PermGroup, data: &ClassData) -> Result<ModularTable> {
    let k = g.classes().len();
    let order = g.order() as u64;
    let e = g.exponent() as u64;
    let p = choose_prime(e, order);
    let counts = class_matrices(g);

    // Subspaces of F_p^k as bases in reduced row echelon form.
    let identity: Mat = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Mat> = vec![identity];
    for (j, a) in counts.iter().enumerate().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for mut space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let pivots = rref(&mut space, p);
            let m = space.len();
            // Image of each basis vector, in pivot coordinates.
            let mut restricted = vec![vec![0u64; m]; m];
            for (i, w) in space.iter().enumerate() {
                for (t, &pc) in pivots.iter().enumerate() {
                    let v = (0..k).fold(0u64, |acc, c| (acc + a[pc][c] * w[c]) % p);
                    restricted[t][i] = v;
                }
            }
            let poly = charpoly(restricted.clone(), p);
            let mut found = 0;
            let mut pieces = Vec::new();
            for lambda in roots(&poly, p) {
                let mut shifted = restricted.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = (row[i] + p - lambda) % p;
                }
                for coords in nullspace(shifted, p) {
                    let mut v = vec![0u64; k];
                    for (ci, w) in coords.iter().zip(&space) {
                        if *ci != 0 {
                            for c in 0..k {
                                v[c] = (v[c] + ci * w[c]) % p;
                            }
                        }
                    }
                    pieces.push((lambda, v));
                }
            }
            let mut lambdas: Vec<u64> = pieces.iter().map(|(l, _)| *l).collect();
            lambdas.dedup();
            for lambda in lambdas {
                let sub: Mat = pieces
                    .iter()
                    .filter(|(l, _)| *l == lambda)
                    .map(|(_, v)| v.clone())
                    .collect();
                found += sub.len();
                next.push(sub);
            }
            if found != m {
                return Err(Error::fault(format!(
                    "class matrix {j} is not diagonalizable modulo {p}"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::fault(
            "class matrices failed to split into characters",
        ));
    }

    let eta = pow_mod(primitive_root(p), (p - 1) / e, p);
    let eta_inv = inv_mod(eta, p);
    let e_inv = inv_mod(e % p, p);
    let bound = (order as f64).sqrt() as u64 + 1;
    let mut degrees = Vec::with_capacity(k);
    let mut mult = Vec::with_capacity(k);
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::fault("eigenvector vanishes at the identity class"));
        }
        let norm = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * norm % p).collect();
        let s = (0..k).fold(0u64, |acc, j| {
            (acc + omega[j] * omega[data.inverse[j]] % p * inv_mod(data.sizes[j] % p, p)) % p
        });
        let target = order % p * inv_mod(s, p) % p;
        let d = (1..=bound)
            .find(|&d| d * d <= order && d * d % p == target)
            .ok_or_else(|| Error::fault("no admissible character degree"))?;
        let chi: Vec<u64> = (0..k)
            .map(|j| omega[j] * d % p * inv_mod(data.sizes[j] % p, p) % p)
            .collect();
        let mut rows = Vec::with_capacity(k);
        for j in 0..k {
            let mut m = vec![0i64; e as usize];
            let mut total = 0;
            for (s, slot) in m.iter_mut().enumerate() {
                let step = pow_mod(eta_inv, s as u64, p);
                let mut w = 1u64;
                let mut acc = 0u64;
                for t in 0..e as usize {
                    acc = (acc + chi[data.power[j][t]] * w) % p;
                    w = w * step % p;
                }
                let ms = acc * e_inv % p;
                if ms > d {
                    return Err(Error::fault("eigenvalue multiplicity exceeds the degree"));
                }
                *slot = ms as i64;
                total += ms;
            }
            if total != d {
                return Err(Error::fault(
                    "eigenvalue multiplicities do not sum to the degree",
                ));
            }
            rows.push(m);
        }
        degrees.push(d);
        mult.push(rows);
    }
    Ok(ModularTable { degrees, mult })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        assert_eq!(choose_prime(6, 6), 7);
        assert_eq!(choose_prime(60, 60), 61);
        assert_eq!(choose_prime(2, 10_000), 211);
    }

    #[test]
    fn charpoly_of_small_matrix() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let poly = charpoly(vec![vec![2, 1], vec![1, 2]], 7);
        assert_eq!(poly, vec![3, 3, 1]);
        assert_eq!(roots(&poly, 7), vec![1, 3]);
    }

    #[test]
    fn nullspace_dimension() {
        let ns = nullspace(vec![vec![1, 2, 3], vec![2, 4, 6]], 7);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
    }
}
