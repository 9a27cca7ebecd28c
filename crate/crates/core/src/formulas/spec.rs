use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, complete, complete_bipartite, complete_multipartite, corona_product, cycle, empty,
    hypercube, path, star, Graph,
};

/// A named graph family with its parameters.
///
/// Parses from and prints to a compact form: `path:7`, `cmp:3,2,1`,
/// `corona:(path:3)x(complete:2)`, `box:(star:2)x(star:2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Hypercube(usize),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    /// Cartesian product of two arbitrary specs.
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
    GBoxK2(Box<FamilySpec>),
    KnBoxKm(usize, usize),
    KnBoxK3(usize),
    StarBoxStar(usize, usize),
}

impl FamilySpec {
    pub fn corona(g: FamilySpec, h: FamilySpec) -> Self {
        FamilySpec::Corona(Box::new(g), Box::new(h))
    }

    pub fn cartesian(g: FamilySpec, h: FamilySpec) -> Self {
        FamilySpec::Cartesian(Box::new(g), Box::new(h))
    }

    /// Builds the graph with the vertex labelling of the family constructors.
    pub fn construct(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Empty(n) => empty(*n),
            FamilySpec::Star(r) => star(*r),
            FamilySpec::CompleteBipartite(r, t) => complete_bipartite(*r, *t),
            FamilySpec::CompleteMultipartite(parts) => complete_multipartite(parts),
            FamilySpec::Hypercube(k) => hypercube(*k),
            FamilySpec::Corona(g, h) => corona_product(&g.construct()?, &h.construct()?),
            FamilySpec::Cartesian(g, h) => Ok(cartesian_product(&g.construct()?, &h.construct()?)),
            FamilySpec::GBoxK2(g) => Ok(cartesian_product(&g.construct()?, &complete(2)?)),
            FamilySpec::KnBoxKm(n, m) => Ok(cartesian_product(&complete(*n)?, &complete(*m)?)),
            FamilySpec::KnBoxK3(n) => Ok(cartesian_product(&complete(*n)?, &complete(3)?)),
            FamilySpec::StarBoxStar(r, s) => Ok(cartesian_product(&star(*r)?, &star(*s)?)),
        }
    }

    /// Order of the constructed graph, without building it.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) | FamilySpec::Empty(n) => *n,
            FamilySpec::Star(r) => r + 1,
            FamilySpec::CompleteBipartite(r, t) => r + t,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Hypercube(k) => u32::try_from(*k).ok().and_then(|k| 1usize.checked_shl(k)).unwrap_or(usize::MAX),
            FamilySpec::Corona(g, h) => g.order() * (1 + h.order()),
            FamilySpec::Cartesian(g, h) => g.order() * h.order(),
            FamilySpec::GBoxK2(g) => 2 * g.order(),
            FamilySpec::KnBoxKm(n, m) => n * m,
            FamilySpec::KnBoxK3(n) => 3 * n,
            FamilySpec::StarBoxStar(r, s) => (r + 1) * (s + 1),
        }
    }
}

fn join_ints(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Star(r) => write!(f, "star:{r}"),
            FamilySpec::CompleteBipartite(r, t) => write!(f, "kbip:{r},{t}"),
            FamilySpec::CompleteMultipartite(parts) => write!(f, "cmp:{}", join_ints(parts)),
            FamilySpec::Hypercube(k) => write!(f, "hypercube:{k}"),
            FamilySpec::Corona(g, h) => write!(f, "corona:({g})x({h})"),
            FamilySpec::Cartesian(g, h) => write!(f, "box:({g})x({h})"),
            FamilySpec::GBoxK2(g) => write!(f, "gbox_k2:({g})"),
            FamilySpec::KnBoxKm(n, m) => write!(f, "kn_km:{n},{m}"),
            FamilySpec::KnBoxK3(n) => write!(f, "kn_k3:{n}"),
            FamilySpec::StarBoxStar(r, s) => write!(f, "star_star:{r},{s}"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("family spec `{}`: {msg} at offset {}", self.src, self.pos))
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn word(&mut self) -> Result<String> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '-'))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a family name"));
        }
        let w = self.rest()[..len].to_ascii_lowercase().replace('-', "_");
        self.pos += len;
        Ok(w)
    }

    fn ints(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
            if len == 0 {
                return Err(self.error("expected an integer"));
            }
            let v = self.rest()[..len].parse().map_err(|_| self.error("integer out of range"))?;
            self.pos += len;
            out.push(v);
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn nested(&mut self) -> Result<FamilySpec> {
        self.expect('(')?;
        let s = self.spec()?;
        self.expect(')')?;
        Ok(s)
    }

    fn pair(&mut self) -> Result<(FamilySpec, FamilySpec)> {
        let g = self.nested()?;
        self.expect('x')?;
        let h = self.nested()?;
        Ok((g, h))
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let name = self.word()?;
        self.expect(':')?;
        let spec = match name.as_str() {
            "path" | "p" => FamilySpec::Path(self.fixed(&name, 1)?[0]),
            "cycle" | "c" => FamilySpec::Cycle(self.fixed(&name, 1)?[0]),
            "complete" | "k" => FamilySpec::Complete(self.fixed(&name, 1)?[0]),
            "empty" | "n" => FamilySpec::Empty(self.fixed(&name, 1)?[0]),
            "star" => FamilySpec::Star(self.fixed(&name, 1)?[0]),
            "hypercube" | "q" => FamilySpec::Hypercube(self.fixed(&name, 1)?[0]),
            "kbip" | "complete_bipartite" => {
                let xs = self.fixed(&name, 2)?;
                FamilySpec::CompleteBipartite(xs[0], xs[1])
            }
            "cmp" | "complete_multipartite" => FamilySpec::CompleteMultipartite(self.ints()?),
            "kn_km" => {
                let xs = self.fixed(&name, 2)?;
                FamilySpec::KnBoxKm(xs[0], xs[1])
            }
            "kn_k3" => FamilySpec::KnBoxK3(self.fixed(&name, 1)?[0]),
            "star_star" => {
                let xs = self.fixed(&name, 2)?;
                FamilySpec::StarBoxStar(xs[0], xs[1])
            }
            "corona" => {
                let (g, h) = self.pair()?;
                FamilySpec::corona(g, h)
            }
            "box" | "cartesian" => {
                let (g, h) = self.pair()?;
                FamilySpec::cartesian(g, h)
            }
            "gbox_k2" => FamilySpec::GBoxK2(Box::new(self.nested()?)),
            _ => return Err(Error::Parse(format!("unknown family `{name}`"))),
        };
        Ok(spec)
    }

    fn fixed(&mut self, name: &str, k: usize) -> Result<Vec<usize>> {
        let xs = self.ints()?;
        if xs.len() == k {
            Ok(xs)
        } else {
            Err(self.error(&format!("`{name}` takes {k} integer(s)")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in [
            "path:7",
            "cmp:3,2,1",
            "corona:(path:3)x(complete:2)",
            "box:(star:2)x(star:2)",
            "gbox_k2:(cycle:5)",
            "kn_km:4,5",
            "box:(box:(path:2)x(path:2))x(empty:3)",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("K:4".parse::<FamilySpec>().unwrap(), FamilySpec::Complete(4));
        assert_eq!(
            "corona: ( path:3 ) x ( k:2 )".parse::<FamilySpec>().unwrap().to_string(),
            "corona:(path:3)x(complete:2)"
        );
    }

    #[test]
    fn parse_errors() {
        for s in ["", "path", "path:", "path:3,4", "blob:3", "corona:(path:3)", "path:3 extra", "box:(path:3)x"] {
            assert!(matches!(s.parse::<FamilySpec>(), Err(Error::Parse(_))), "{s}");
        }
    }

    #[test]
    fn construct_orders_agree() {
        for s in ["corona:(path:3)x(complete:2)", "star_star:3,2", "hypercube:4", "cmp:3,2,1"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.construct().unwrap().order(), spec.order());
        }
    }
}
