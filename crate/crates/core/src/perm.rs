//! Permutations on `{0, .., degree - 1}`.
//!
//! Products compose right to left: `(g * h)(x) = g(h(x))`, so `g * h` applies
//! `h` first. Text uses 1-based cycle notation such as `(1,2)(3,4,5)`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument(format!(
                    "image array {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidArgument(format!(
                        "point {} outside degree {degree}",
                        p + 1
                    )));
                }
                if touched[p] {
                    return Err(Error::InvalidArgument(format!(
                        "point {} repeated in cycle notation",
                        p + 1
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Places `self` on points `offset..offset + degree` of a permutation of `total` points.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its least point, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Parity as +1 / -1.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// Parses 1-based cycle notation like `(1,2)(3,4,5)` into 0-based cycles.
/// `offset` is added to reported error positions.
pub fn parse_cycles(text: &str, offset: usize) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles = Vec::new();
    let err = |pos: usize, msg: &str| Error::Parse {
        pos: offset + pos,
        msg: msg.to_string(),
    };
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(err(i, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == b')' && cycle.is_empty() {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, "expected a point number"));
            }
            let p: usize = text[start..i]
                .parse()
                .map_err(|_| err(start, "point number out of range"))?;
            if p == 0 {
                return Err(err(start, "points are numbered from 1"));
            }
            cycle.push(p - 1);
            skip_ws(&mut i);
            match bytes.get(i) {
                Some(b',') => i += 1,
                Some(b')') => {
                    i += 1;
                    break;
                }
                _ => return Err(err(i, "expected ',' or ')'")),
            }
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        skip_ws(&mut i);
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // (a*b)(1) = a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&a), Permutation::identity(3));
    }

    #[test]
    fn cycle_round_trip() {
        let cycles = parse_cycles("(1,2)(3, 4 ,5)", 0).unwrap();
        let p = Permutation::from_cycles(5, &cycles).unwrap();
        assert_eq!(p.to_string(), "(1,2)(3,4,5)");
        assert_eq!(p.order(), 6);
        assert_eq!(p.sign(), -1);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(5));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_cycles("(1,2)x", 10) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 15),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_cycles("(0,1)", 0).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn identity_is_lexicographically_least() {
        let id = Permutation::identity(4);
        let t = Permutation::from_cycles(4, &[vec![2, 3]]).unwrap();
        assert!(id < t);
    }
}
