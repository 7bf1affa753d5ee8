//! Textual group specifications and the builtin group constructors.
//!
//! ```text
//! spec   := sym(n) | alt(n) | dihedral(p) | cyclic(n) | weylA(n) | weylD(n)
//!         | rot(spec) | product(spec, spec) | perm(degree; cycles {; cycles})
//! cycles := 1-based cycle notation, e.g. (1,2)(3,4)
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{parse_cycles, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Alt(usize),
    /// Dihedral group of order `2p` acting on the vertices of a `p`-gon.
    Dihedral(usize),
    Cyclic(usize),
    /// Weyl group of type A_n, i.e. `Sym(n + 1)`.
    WeylA(usize),
    /// Weyl group of type D_n as signed permutations on `2n` points with
    /// an even number of sign changes; point `k + n` stands for `-e_k`.
    WeylD(usize),
    /// Index-2 subgroup generated by pairwise products of the generators.
    Rot(Box<GroupSpec>),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    /// Explicit generators given as 0-based cycles.
    Perm {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |a, b| a.saturating_mul(b))
}

impl GroupSpec {
    /// Order predicted without enumeration, when it is known in closed form.
    pub fn predicted_order(&self) -> Option<u128> {
        match self {
            GroupSpec::Sym(n) => Some(factorial(*n)),
            GroupSpec::Alt(n) => Some(if *n < 2 { 1 } else { factorial(*n) / 2 }),
            GroupSpec::Dihedral(p) => Some(2 * *p as u128),
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::WeylA(n) => Some(factorial(n + 1)),
            GroupSpec::WeylD(n) => Some(factorial(*n).saturating_mul(1u128 << (n - 1).min(100))),
            GroupSpec::Rot(inner) => inner.predicted_order().map(|o| o / 2),
            GroupSpec::Product(a, b) => {
                Some(a.predicted_order()?.saturating_mul(b.predicted_order()?))
            }
            GroupSpec::Perm { .. } => None,
        }
    }

    fn degree(&self) -> usize {
        match self {
            GroupSpec::Sym(n)
            | GroupSpec::Alt(n)
            | GroupSpec::Dihedral(n)
            | GroupSpec::Cyclic(n) => *n,
            GroupSpec::WeylA(n) => n + 1,
            GroupSpec::WeylD(n) => 2 * n,
            GroupSpec::Rot(inner) => inner.degree(),
            GroupSpec::Product(a, b) => a.degree() + b.degree(),
            GroupSpec::Perm { degree, .. } => *degree,
        }
    }

    /// Generating permutations of the builtin presentation.
    fn generators(&self) -> Result<Vec<Permutation>> {
        let cyc = |n: usize, cycles: &[Vec<usize>]| Permutation::from_cycles(n, cycles);
        Ok(match self {
            GroupSpec::Sym(_) | GroupSpec::WeylA(_) => {
                let n = self.degree();
                (0..n.saturating_sub(1))
                    .map(|i| cyc(n, &[vec![i, i + 1]]))
                    .collect::<Result<_>>()?
            }
            GroupSpec::Alt(n) => (2..*n)
                .map(|k| cyc(*n, &[vec![0, 1, k]]))
                .collect::<Result<_>>()?,
            GroupSpec::Dihedral(p) => {
                // Two reflections: i -> -i and i -> 1 - i (mod p).
                let s = (0..*p).map(|i| ((p - i) % p) as u32).collect();
                let t = (0..*p).map(|i| ((p + 1 - i) % p) as u32).collect();
                vec![Permutation::from_images(s)?, Permutation::from_images(t)?]
            }
            GroupSpec::Cyclic(n) => {
                if *n > 1 {
                    vec![cyc(*n, &[(0..*n).collect()])?]
                } else {
                    Vec::new()
                }
            }
            GroupSpec::WeylD(n) => {
                let n = *n;
                let mut gens = Vec::new();
                for i in 0..n - 1 {
                    gens.push(cyc(2 * n, &[vec![i, i + 1], vec![n + i, n + i + 1]])?);
                }
                // e_{n-1} <-> -e_n
                gens.push(cyc(
                    2 * n,
                    &[vec![n - 2, 2 * n - 1], vec![n - 1, 2 * n - 2]],
                )?);
                gens
            }
            GroupSpec::Product(a, b) => {
                let (da, db) = (a.degree(), b.degree());
                let mut gens: Vec<Permutation> = a
                    .generators()?
                    .iter()
                    .map(|g| g.shifted(0, da + db))
                    .collect();
                gens.extend(b.generators()?.iter().map(|g| g.shifted(da, da + db)));
                gens
            }
            GroupSpec::Rot(inner) => {
                let base = inner.generators()?;
                let mut gens = Vec::new();
                for a in &base {
                    for b in &base {
                        let p = a.compose(b);
                        if !p.is_identity() && !gens.contains(&p) {
                            gens.push(p);
                        }
                    }
                }
                gens
            }
            GroupSpec::Perm { degree, generators } => generators
                .iter()
                .map(|c| cyc(*degree, c))
                .collect::<Result<_>>()?,
        })
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        match self {
            GroupSpec::Sym(0) | GroupSpec::Alt(0) | GroupSpec::Cyclic(0) => {
                bad(format!("{self}: degree must be positive"))
            }
            GroupSpec::Dihedral(p) if *p < 3 => bad(format!("{self}: need p >= 3")),
            GroupSpec::WeylD(n) if *n < 2 => bad(format!("{self}: need n >= 2")),
            GroupSpec::Rot(inner) => inner.validate(),
            GroupSpec::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Enumerates the group, refusing anything larger than `cap`.
    pub fn realize(&self, cap: usize) -> Result<PermGroup> {
        self.validate()?;
        if let Some(order) = self.predicted_order() {
            if order > cap as u128 {
                return Err(Error::OrderCapExceeded { order, cap });
            }
        }
        let group = match self {
            GroupSpec::Rot(inner) => {
                let parent = inner.realize(cap)?;
                let rot = PermGroup::generate(self.degree(), &self.generators()?, cap)?;
                if rot.order() * 2 != parent.order() {
                    return Err(Error::NotIndexTwo {
                        index: parent.order() / rot.order(),
                    });
                }
                rot
            }
            _ => PermGroup::generate(self.degree(), &self.generators()?, cap)?,
        };
        Ok(group)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Sym(n) => write!(f, "sym({n})"),
            GroupSpec::Alt(n) => write!(f, "alt({n})"),
            GroupSpec::Dihedral(p) => write!(f, "dihedral({p})"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::WeylA(n) => write!(f, "weylA({n})"),
            GroupSpec::WeylD(n) => write!(f, "weylD({n})"),
            GroupSpec::Rot(inner) => write!(f, "rot({inner})"),
            GroupSpec::Product(a, b) => write!(f, "product({a},{b})"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "perm({degree}")?;
                for g in generators {
                    write!(f, ";")?;
                    let p = Permutation::from_cycles(*degree, g).map_err(|_| fmt::Error)?;
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a group constructor name"));
        }
        Ok(&self.text[start..self.pos])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let name_pos = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        self.expect('(')?;
        let spec = match name {
            "sym" => GroupSpec::Sym(self.number()?),
            "alt" => GroupSpec::Alt(self.number()?),
            "dihedral" => GroupSpec::Dihedral(self.number()?),
            "cyclic" => GroupSpec::Cyclic(self.number()?),
            "weylA" => GroupSpec::WeylA(self.number()?),
            "weylD" => GroupSpec::WeylD(self.number()?),
            "rot" => GroupSpec::Rot(Box::new(self.spec()?)),
            "product" => {
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                GroupSpec::Product(Box::new(a), Box::new(b))
            }
            "perm" => {
                let degree = self.number()?;
                let mut generators = Vec::new();
                loop {
                    self.skip_ws();
                    if self.text[self.pos..].starts_with(')') {
                        break;
                    }
                    self.expect(';')?;
                    self.skip_ws();
                    let start = self.pos;
                    while self.text[self.pos..].starts_with('(') {
                        let close = self.text[self.pos..]
                            .find(')')
                            .ok_or_else(|| self.err("unterminated cycle"))?;
                        self.pos += close + 1;
                        self.skip_ws();
                    }
                    let chunk = &self.text[start..self.pos];
                    let cycles = parse_cycles(chunk, start)?;
                    for c in &cycles {
                        if let Some(&p) = c.iter().find(|&&p| p >= degree) {
                            return Err(Error::Parse {
                                pos: start,
                                msg: format!("point {} exceeds degree {degree}", p + 1),
                            });
                        }
                    }
                    generators.push(cycles);
                }
                GroupSpec::Perm { degree, generators }
            }
            other => {
                return Err(Error::Parse {
                    pos: name_pos,
                    msg: format!("unknown group constructor '{other}'"),
                })
            }
        };
        self.expect(')')?;
        Ok(spec)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { text: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}

/// Parses and enumerates a group in one step.
pub fn realize_group(text: &str, cap: usize) -> Result<PermGroup> {
    text.parse::<GroupSpec>()?.realize(cap)
}
