//! Standard graph families and a small textual grammar for naming them.
//!
//! Vertex numbering is fixed so that edge lists are reproducible:
//!
//! * `Complete(n)`, `Edgeless(n)`, `Path(n)`, `Cycle(n)`: `0..n` in order.
//! * `Star(k)`: centre `0`, leaves `1..=k`.
//! * `DoubleStar(k, n)`: centres `0` and `1`; the `k` leaves of `0`, then the
//!   `n` leaves of `1`.
//! * `Spider(l_1..l_k)`: centre `0`, then each leg in order, listed from the
//!   centre outwards.
//! * `DoubleSpider(l_1..l_k; m_1..m_n)`: centres `0` and `1`, the legs of `0`,
//!   then the legs of `1`, each listed outwards.
//! * `Hypercube(n)`: vertex `i` is the bit string `i`; neighbours differ in
//!   exactly one bit.
//! * `DisjointUnion` and `CartesianProduct` fold left to right using
//!   [`Graph::disjoint_union`] and [`Graph::cartesian_product`].
//!
//! # Grammar
//!
//! ```text
//! expr   := term ('+' term)*            disjoint union
//! term   := factor ('*' factor)*        Cartesian product
//! factor := [count] atom | [count] '(' expr ')'
//! atom   := name digits | name ':' params
//! params := list (';' list)?            list := int (',' int)*
//! ```
//!
//! A leading count `c` repeats the factor as a disjoint union, so `2k2` is
//! two disjoint edges. Names: `k`/`complete`, `e`/`empty`/`edgeless`,
//! `p`/`path`, `c`/`cycle`, `star`, `doublestar`, `spider`, `doublespider`,
//! `q`/`hypercube`. Examples: `path4`, `k5`, `doublestar:2,2`,
//! `doublespider:1,1;1,2`, `k2*k2*k2`, `3k2+k1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Edgeless(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    DoubleStar(usize, usize),
    Spider(Vec<usize>),
    DoubleSpider(Vec<usize>, Vec<usize>),
    Hypercube(usize),
    DisjointUnion(Vec<FamilySpec>),
    CartesianProduct(Vec<FamilySpec>),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Family(msg.into())
}

/// Adds a leg of `len` vertices hanging from `root`, numbered from `next`.
fn add_leg(g: &mut Graph, root: usize, len: usize, next: &mut usize) -> Result<()> {
    let mut prev = root;
    for _ in 0..len {
        g.add_edge(prev, *next)?;
        prev = *next;
        *next += 1;
    }
    Ok(())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match self {
            Complete(n) if *n < 1 => Err(bad("complete graph needs n >= 1")),
            Path(n) if *n < 1 => Err(bad("path needs n >= 1")),
            Cycle(n) if *n < 3 => Err(bad("cycle needs n >= 3")),
            Star(k) if *k < 1 => Err(bad("star needs k >= 1")),
            DoubleStar(k, n) if *k < 1 || *n < 1 => Err(bad("double star needs k, n >= 1")),
            Spider(legs) if legs.len() < 2 => Err(bad("spider needs at least two legs")),
            Spider(legs) if legs.contains(&0) => Err(bad("spider legs must have length >= 1")),
            DoubleSpider(a, b) if a.is_empty() || b.is_empty() => {
                Err(bad("double spider needs at least one leg at each centre"))
            }
            DoubleSpider(a, b) if a.contains(&0) || b.contains(&0) => {
                Err(bad("double spider legs must have length >= 1"))
            }
            Hypercube(n) if *n > 7 => Err(Error::TooManyVertices(1usize << (*n).min(63))),
            DisjointUnion(parts) | CartesianProduct(parts) if parts.is_empty() => {
                Err(bad("union and product need at least one operand"))
            }
            DisjointUnion(parts) | CartesianProduct(parts) => {
                parts.iter().try_for_each(FamilySpec::validate)
            }
            _ => Ok(()),
        }
    }

    fn vertex_count(&self) -> usize {
        use FamilySpec::*;
        match self {
            Complete(n) | Edgeless(n) | Path(n) | Cycle(n) => *n,
            Star(k) => k + 1,
            DoubleStar(k, n) => k + n + 2,
            Spider(legs) => 1 + legs.iter().sum::<usize>(),
            DoubleSpider(a, b) => 2 + a.iter().sum::<usize>() + b.iter().sum::<usize>(),
            Hypercube(n) => 1usize << n,
            DisjointUnion(parts) => parts.iter().map(Self::vertex_count).sum(),
            CartesianProduct(parts) => parts
                .iter()
                .map(Self::vertex_count)
                .fold(1usize, |a, b| a.saturating_mul(b)),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.vertex_count();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        use FamilySpec::*;
        match self {
            Complete(n) => Graph::complete(*n),
            Edgeless(n) => Graph::new(*n),
            Path(n) => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i))),
            Cycle(n) => Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n))),
            Star(k) => Graph::from_edges(k + 1, (1..=*k).map(|i| (0, i))),
            DoubleStar(k, m) => {
                let mut g = Graph::new(n)?;
                g.add_edge(0, 1)?;
                for i in 0..*k {
                    g.add_edge(0, 2 + i)?;
                }
                for i in 0..*m {
                    g.add_edge(1, 2 + k + i)?;
                }
                Ok(g)
            }
            Spider(legs) => {
                let mut g = Graph::new(n)?;
                let mut next = 1;
                for &len in legs {
                    add_leg(&mut g, 0, len, &mut next)?;
                }
                Ok(g)
            }
            DoubleSpider(a, b) => {
                let mut g = Graph::new(n)?;
                g.add_edge(0, 1)?;
                let mut next = 2;
                for &len in a {
                    add_leg(&mut g, 0, len, &mut next)?;
                }
                for &len in b {
                    add_leg(&mut g, 1, len, &mut next)?;
                }
                Ok(g)
            }
            Hypercube(d) => {
                let mut g = Graph::new(n)?;
                for v in 0..n {
                    for bit in 0..*d {
                        let w = v ^ (1 << bit);
                        if v < w {
                            g.add_edge(v, w)?;
                        }
                    }
                }
                Ok(g)
            }
            DisjointUnion(parts) => parts
                .iter()
                .try_fold(Graph::new(0)?, |acc, p| acc.disjoint_union(&p.build()?)),
            CartesianProduct(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().expect("validated non-empty").build()?;
                iter.try_fold(first, |acc, p| acc.cartesian_product(&p.build()?))
            }
        }
    }

    pub fn parse(text: &str) -> Result<FamilySpec> {
        let mut p = Parser {
            s: text.trim().as_bytes(),
            pos: 0,
        };
        let spec = p.expr()?;
        if p.pos != p.s.len() {
            return Err(bad(format!("unexpected input at offset {} in `{text}`", p.pos)));
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// `build_family`: constructs the graph named by `spec`.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.build()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Prints in the grammar accepted by [`FamilySpec::parse`].
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let list = |f: &mut fmt::Formatter<'_>, parts: &[FamilySpec], sep: &str| {
            f.write_str("(")?;
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")
        };
        match self {
            Complete(n) => write!(f, "k{n}"),
            Edgeless(n) => write!(f, "empty{n}"),
            Path(n) => write!(f, "path{n}"),
            Cycle(n) => write!(f, "cycle{n}"),
            Star(k) => write!(f, "star{k}"),
            DoubleStar(k, n) => write!(f, "doublestar:{k},{n}"),
            Spider(legs) => write!(f, "spider:{}", join(legs)),
            DoubleSpider(a, b) => write!(f, "doublespider:{};{}", join(a), join(b)),
            Hypercube(n) => write!(f, "q{n}"),
            DisjointUnion(parts) => list(f, parts, "+"),
            CartesianProduct(parts) => list(f, parts, "*"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn expect_number(&mut self) -> Result<usize> {
        self.number()
            .ok_or_else(|| bad(format!("expected a number at offset {}", self.pos)))
    }

    fn list(&mut self) -> Result<Vec<usize>> {
        let mut xs = vec![self.expect_number()?];
        while self.eat(b',') {
            xs.push(self.expect_number()?);
        }
        Ok(xs)
    }

    fn expr(&mut self) -> Result<FamilySpec> {
        let mut parts = vec![self.term()?];
        while self.eat(b'+') {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            FamilySpec::DisjointUnion(parts)
        })
    }

    fn term(&mut self) -> Result<FamilySpec> {
        let mut parts = vec![self.factor()?];
        while self.eat(b'*') {
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            FamilySpec::CartesianProduct(parts)
        })
    }

    fn factor(&mut self) -> Result<FamilySpec> {
        let count = self.number();
        let inner = if self.eat(b'(') {
            let e = self.expr()?;
            if !self.eat(b')') {
                return Err(bad(format!("expected `)` at offset {}", self.pos)));
            }
            e
        } else {
            self.atom()?
        };
        Ok(match count {
            None | Some(1) => inner,
            Some(0) => return Err(bad("repetition count must be positive")),
            Some(c) => FamilySpec::DisjointUnion(vec![inner; c]),
        })
    }

    fn atom(&mut self) -> Result<FamilySpec> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .to_ascii_lowercase();
        if name.is_empty() {
            return Err(bad(format!("expected a family name at offset {start}")));
        }
        let (first, second) = if self.eat(b':') {
            let a = self.list()?;
            let b = if self.eat(b';') { Some(self.list()?) } else { None };
            (a, b)
        } else {
            (vec![self.expect_number()?], None)
        };
        let single = |xs: &[usize]| -> Result<usize> {
            match xs {
                [x] => Ok(*x),
                _ => Err(bad(format!("`{name}` takes one parameter"))),
            }
        };
        use FamilySpec::*;
        let spec = match (name.as_str(), second) {
            ("k" | "complete", None) => Complete(single(&first)?),
            ("e" | "empty" | "edgeless", None) => Edgeless(single(&first)?),
            ("p" | "path", None) => Path(single(&first)?),
            ("c" | "cycle", None) => Cycle(single(&first)?),
            ("star", None) => Star(single(&first)?),
            ("q" | "hypercube", None) => Hypercube(single(&first)?),
            ("doublestar", None) => match first[..] {
                [k, n] => DoubleStar(k, n),
                _ => return Err(bad("doublestar takes two parameters")),
            },
            ("spider", None) => Spider(first),
            ("doublespider", Some(second)) => DoubleSpider(first, second),
            ("doublespider", None) => return Err(bad("doublespider needs `;` between the leg lists")),
            (other, _) => return Err(bad(format!("unknown family `{other}` or wrong parameters"))),
        };
        Ok(spec)
    }
}
