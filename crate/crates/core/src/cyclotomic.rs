//! Exact arithmetic in the cyclotomic field `Q(ζ_e)`.
//!
//! A value is stored as its remainder modulo the cyclotomic polynomial `Φ_e`:
//! `φ(e)` rational coefficients of `1, ζ, .., ζ^(φ(e)-1)`. The representation is
//! canonical, so equality is coefficient equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Why a value is not a rational integer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotIntegral {
    #[error("value is not rational")]
    Irrational,
    #[error("rational value {0} is not an integer")]
    Fractional(BigRational),
}

/// Coefficients of `Φ_e`, lowest degree first.
pub fn cyclotomic_polynomial(e: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache poisoned").get(&e) {
        return p.clone();
    }
    assert!(e >= 1, "root-of-unity order must be positive");
    // x^e - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            num = exact_div(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(num);
    cache.lock().expect("cache poisoned").insert(e, p.clone());
    p
}

/// Quotient of `a` by the monic polynomial `b`, assuming exact divisibility.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db];
        q[k] = c;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                rem[k + i] -= c * bi;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    e: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(e: u32) -> Self {
        Cyclotomic {
            e,
            coeffs: vec![BigRational::zero(); euler_phi(e) as usize],
        }
    }

    pub fn one(e: u32) -> Self {
        Self::from_rational(e, BigRational::one())
    }

    pub fn from_rational(e: u32, r: BigRational) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(e: u32, n: i64) -> Self {
        Self::from_rational(e, BigRational::from_integer(n.into()))
    }

    /// `ζ_e^k`.
    pub fn zeta_power(e: u32, k: i64) -> Self {
        let mut c = vec![0i64; e as usize];
        c[k.rem_euclid(e as i64) as usize] = 1;
        Self::from_integer_exponents(e, &c)
    }

    /// `Σ c_k ζ_e^k` with exponents taken modulo `e`.
    pub fn from_exponent_coeffs(e: u32, coeffs: &[BigRational]) -> Self {
        let mut full = vec![BigRational::zero(); e as usize];
        for (k, c) in coeffs.iter().enumerate() {
            full[k % e as usize] += c;
        }
        Self::reduce_rational(e, full)
    }

    /// Integer version of [`Cyclotomic::from_exponent_coeffs`].
    pub fn from_integer_exponents(e: u32, coeffs: &[i64]) -> Self {
        let mut full = vec![0i128; e as usize];
        for (k, &c) in coeffs.iter().enumerate() {
            full[k % e as usize] += c as i128;
        }
        Self::reduce_integer(e, full).expect("small integer coefficients")
    }

    pub fn order(&self) -> u32 {
        self.e
    }

    /// Canonical coefficients of `1, ζ, .., ζ^(φ(e)-1)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_rational_integer(&self) -> std::result::Result<BigInt, NotIntegral> {
        let r = self.as_rational().ok_or(NotIntegral::Irrational)?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(NotIntegral::Fractional(r))
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Image under the automorphism `ζ_e ↦ ζ_e^k`.
    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let e = self.e as i64;
        if k.gcd(&e) != 1 {
            return Err(Error::NotCoprime { k, order: self.e });
        }
        let k = k.rem_euclid(e) as usize;
        if let Some(ints) = self.small_integers() {
            let mut full = vec![0i128; self.e as usize];
            for (j, c) in ints.into_iter().enumerate() {
                full[(j * k) % self.e as usize] += c;
            }
            if let Some(r) = Self::reduce_integer(self.e, full) {
                return Ok(r);
            }
        }
        let mut full = vec![BigRational::zero(); self.e as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            full[(j * k) % self.e as usize] = c.clone();
        }
        Ok(Self::reduce_rational(self.e, full))
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois_apply(-1).expect("-1 is a unit")
    }

    /// The same value viewed in `Q(ζ_m)`; requires `e | m`.
    pub fn embed(&self, m: u32) -> Result<Self> {
        if !m.is_multiple_of(self.e) {
            return Err(Error::InvalidArgument(format!(
                "cannot embed Q(E({})) into Q(E({m}))",
                self.e
            )));
        }
        let step = (m / self.e) as usize;
        let mut full = vec![BigRational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            full[j * step] = c.clone();
        }
        Ok(Self::reduce_rational(m, full))
    }

    /// The same value in `Q(ζ_m)` for the least `m` dividing the order that contains it.
    pub fn in_smallest_field(&self) -> Self {
        for m in (1..=self.e).filter(|m| self.e.is_multiple_of(*m)) {
            if m % 4 == 2 || m == self.e {
                continue;
            }
            if let Some(c) = self.coordinates_in(m) {
                return Cyclotomic { e: m, coeffs: c };
            }
        }
        self.clone()
    }

    /// Solves `self = Σ_j c_j ζ_m^j` over the basis `j < φ(m)`, if possible.
    fn coordinates_in(&self, m: u32) -> Option<Vec<BigRational>> {
        let cols = euler_phi(m) as usize;
        let rows = self.coeffs.len();
        let basis: Vec<Cyclotomic> = (0..cols)
            .map(|j| {
                Cyclotomic::zeta_power(m, j as i64)
                    .embed(self.e)
                    .expect("m divides e")
            })
            .collect();
        let mut a: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<BigRational> = basis.iter().map(|b| b.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][col].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            let pivot = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != r && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                        *x -= y * &f;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        if a[r..].iter().any(|row| !row[cols].is_zero()) {
            return None;
        }
        let mut c = vec![BigRational::zero(); cols];
        for (i, &col) in pivots.iter().enumerate() {
            c[col] = a[i][cols].clone();
        }
        Some(c)
    }

    /// Coefficients as `i128` when all are integers of moderate size.
    fn small_integers(&self) -> Option<Vec<i128>> {
        const LIMIT: i64 = 1 << 40;
        self.coeffs
            .iter()
            .map(|c| {
                if !c.is_integer() {
                    return None;
                }
                let v = c.numer().to_i64()?;
                (v.abs() < LIMIT).then_some(v as i128)
            })
            .collect()
    }

    fn reduce_rational(e: u32, mut full: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(e);
        let deg = phi.len() - 1;
        for top in (deg..full.len()).rev() {
            let c = std::mem::take(&mut full[top]);
            if c.is_zero() {
                continue;
            }
            for (i, &p) in phi[..deg].iter().enumerate() {
                if p != 0 {
                    full[top - deg + i] -= &c * BigInt::from(p);
                }
            }
        }
        full.truncate(deg);
        Cyclotomic { e, coeffs: full }
    }

    /// Returns `None` on overflow.
    fn reduce_integer(e: u32, mut full: Vec<i128>) -> Option<Self> {
        let phi = cyclotomic_polynomial(e);
        let deg = phi.len() - 1;
        for top in (deg..full.len()).rev() {
            let c = full[top];
            if c == 0 {
                continue;
            }
            full[top] = 0;
            for (i, &p) in phi[..deg].iter().enumerate() {
                if p != 0 {
                    let t = c.checked_mul(p as i128)?;
                    full[top - deg + i] = full[top - deg + i].checked_sub(t)?;
                }
            }
        }
        full.truncate(deg);
        Some(Cyclotomic {
            e,
            coeffs: full
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        })
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.e, other.e,
            "cyclotomic operands must share the root-of-unity order"
        );
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            e: self.e,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            e: self.e,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        let n = self.coeffs.len();
        if let (Some(a), Some(b)) = (self.small_integers(), rhs.small_integers()) {
            let mut full = vec![0i128; 2 * n - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    full[i + j] += x * y;
                }
            }
            if let Some(r) = Cyclotomic::reduce_integer(self.e, full) {
                return r;
            }
        }
        let mut full = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    full[i + j] += x * y;
                }
            }
        }
        Cyclotomic::reduce_rational(self.e, full)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// GAP-style text, e.g. `-1/2*E(5)^2+E(5)^3`; rational values print plainly.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let root = match k {
                0 => String::new(),
                1 => format!("E({})", self.e),
                _ => format!("E({})^{k}", self.e),
            };
            let body = if k == 0 {
                mag.to_string()
            } else if mag.is_one() {
                root
            } else {
                format!("{mag}*{root}")
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: u32, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_power(e, k)
    }

    fn int(e: u32, n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(e, n)
    }

    fn mobius(mut n: u32) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for e in 1..60 {
            assert_eq!(cyclotomic_polynomial(e).len() - 1, euler_phi(e) as usize);
        }
    }

    #[test]
    fn basic_identities() {
        assert_eq!(&z(3, 1) + &z(3, 2), int(3, -1));
        assert_eq!(&z(5, 1) * &z(5, 4), int(5, 1));
        let s = &z(8, 1) + &z(8, -1);
        assert_eq!(&s * &s, int(8, 2));
        assert_eq!(z(7, 7), int(7, 1));
    }

    #[test]
    fn galois_action() {
        assert_eq!(z(5, 1).galois_apply(2).unwrap(), z(5, 2));
        let c = &z(5, 1) + &z(5, -1);
        assert_eq!(c.galois_apply(2).unwrap(), &z(5, 2) + &z(5, -2));
        let half = Cyclotomic::from_rational(12, BigRational::new(1.into(), 2.into()));
        assert_eq!(half.galois_apply(5).unwrap(), half);
        assert!(matches!(
            z(6, 1).galois_apply(3),
            Err(Error::NotCoprime { k: 3, order: 6 })
        ));
    }

    #[test]
    fn integrality() {
        assert_eq!(
            (&z(3, 1) + &z(3, 2)).as_rational_integer(),
            Ok(BigInt::from(-1))
        );
        assert_eq!(z(5, 1).as_rational_integer(), Err(NotIntegral::Irrational));
        assert_eq!(
            Cyclotomic::zero(9).as_rational_integer(),
            Ok(BigInt::from(0))
        );
        let third = Cyclotomic::from_rational(4, BigRational::new(1.into(), 3.into()));
        assert!(matches!(
            third.as_rational_integer(),
            Err(NotIntegral::Fractional(_))
        ));
    }

    #[test]
    fn primitive_root_sums_are_mobius() {
        for e in 1..=30u32 {
            let mut sum = Cyclotomic::zero(e);
            for k in 0..e as i64 {
                if k.gcd(&(e as i64)) == 1 {
                    sum = &sum + &z(e, k);
                }
            }
            assert_eq!(sum, int(e, mobius(e)), "e = {e}");
        }
    }

    #[test]
    fn embedding_preserves_values() {
        let a = &z(3, 1) * &int(3, 2);
        let b = a.embed(6).unwrap();
        assert_eq!(b, &z(6, 2) * &int(6, 2));
        assert!(a.embed(4).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(int(5, -3).to_string(), "-3");
        assert_eq!(z(5, 2).to_string(), "E(5)^2");
        let v = &(&z(5, 1) + &z(5, 4)) * &int(5, 2);
        assert_eq!(v.to_string(), "-2-2*E(5)^2-2*E(5)^3");
        assert_eq!(z(5, 1).to_string(), "E(5)");
    }

    #[test]
    fn large_coefficients_use_the_exact_path() {
        let big = int(5, 1 << 50);
        let p = &(&big * &z(5, 1)) * &big;
        let expect = Cyclotomic::from_rational(
            5,
            BigRational::from_integer(BigInt::from(1i64 << 50) * BigInt::from(1i64 << 50)),
        );
        assert_eq!(p, &expect * &z(5, 1));
    }

    #[test]
    fn smallest_field() {
        let x = &Cyclotomic::zeta_power(10, 2) - &Cyclotomic::zeta_power(10, 3);
        let y = x.in_smallest_field();
        assert_eq!(y.order(), 5);
        assert_eq!(y.embed(10).unwrap(), x);
        assert_eq!(Cyclotomic::zeta_power(12, 3).in_smallest_field().order(), 4);
        assert_eq!(
            Cyclotomic::from_integer(12, 3).in_smallest_field().order(),
            1
        );
        assert_eq!(
            Cyclotomic::zeta_power(12, 1).in_smallest_field().order(),
            12
        );
    }
}
