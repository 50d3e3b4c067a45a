//! A small language for naming groups:
//!
//! ```text
//! expr := term ("x" term)*
//! term := FAMILY INT | "E" INT "^" INT | "gens:" gen ("," gen)* | "(" expr ")"
//! gen  := cycle+            cycle := "(" INT* ")"
//! ```
//!
//! Family letters are `C D S A Q E` in either case; whitespace is ignored.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::group::{direct_product, group_from_generators, FiniteGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Family(Family),
    Gens(Vec<Permutation>),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn parse(text: &str) -> Result<GroupExpr> {
        let mut p = Parser {
            chars: text.char_indices().collect(),
            pos: 0,
            len: text.len(),
        };
        let e = p.expr()?;
        if let Some(c) = p.peek() {
            return p.error(format!("unexpected `{c}`"));
        }
        Ok(e)
    }

    pub fn build(&self, cap: usize) -> Result<Arc<FiniteGroup>> {
        let group = match self {
            GroupExpr::Family(f) => f.build(cap)?,
            GroupExpr::Gens(perms) => group_from_generators(perms, cap)?,
            GroupExpr::Product(l, r) => {
                let (g, _, _) = direct_product(&l.build(cap)?, &r.build(cap)?, cap)?;
                Arc::unwrap_or_clone(g)
            }
        };
        Ok(Arc::new(group.with_label(self.to_string())))
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Family(fam) => write!(f, "{fam}"),
            GroupExpr::Gens(perms) => {
                let body: Vec<String> = perms.iter().map(|p| p.to_string()).collect();
                write!(f, "gens: {}", body.join(", "))
            }
            GroupExpr::Product(l, r) => match **r {
                GroupExpr::Product(..) => write!(f, "{l} x ({r})"),
                _ => write!(f, "{l} x {r}"),
            },
        }
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|&(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    /// Next non-whitespace character.
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&mut self) -> usize {
        self.skip_ws();
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn error<T>(&mut self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    /// A run of digits; whitespace may precede it but not split it.
    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|&(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        match digits.parse() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.error("number too large")
            }
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut e = self.term()?;
        while self.peek().is_some_and(|c| c == 'x' || c == 'X') {
            self.pos += 1;
            let r = self.term()?;
            e = GroupExpr::Product(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<GroupExpr> {
        match self.peek() {
            None => self.error("unexpected end of input"),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.eq_ignore_ascii_case(&'g') => self.gens(),
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.offset();
                self.pos += 1;
                let family = match c.to_ascii_uppercase() {
                    'C' => Family::Cyclic(self.number()?),
                    'D' => Family::Dihedral(self.number()?),
                    'S' => Family::Symmetric(self.number()?),
                    'A' => Family::Alternating(self.number()?),
                    'Q' => Family::Quaternion(self.number()?),
                    'E' => {
                        let p = self.number()?;
                        self.expect('^')?;
                        Family::ElementaryAbelian { p, k: self.number()? }
                    }
                    _ => return Err(Error::UnknownFamily { name: c.to_string(), pos: at }),
                };
                family.generators()?;
                Ok(GroupExpr::Family(family))
            }
            Some(c) => self.error(format!("unexpected `{c}`")),
        }
    }

    fn gens(&mut self) -> Result<GroupExpr> {
        for expected in "gens".chars() {
            if !self.peek().is_some_and(|c| c.eq_ignore_ascii_case(&expected)) {
                return self.error("expected `gens:`");
            }
            self.pos += 1;
        }
        self.expect(':')?;
        let mut generators: Vec<Vec<Vec<usize>>> = Vec::new();
        loop {
            if self.peek() != Some('(') {
                return self.error("expected a cycle");
            }
            let mut cycles = Vec::new();
            while self.peek() == Some('(') {
                cycles.push(self.cycle()?);
            }
            generators.push(cycles);
            if !self.eat(',') {
                break;
            }
        }
        let degree = generators.iter().flatten().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let perms = generators
            .iter()
            .map(|cycles| {
                let nontrivial: Vec<Vec<usize>> = cycles.iter().filter(|c| c.len() > 1).cloned().collect();
                Permutation::from_cycles(degree, &nontrivial)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupExpr::Gens(perms))
    }

    fn cycle(&mut self) -> Result<Vec<usize>> {
        self.expect('(')?;
        let mut points = Vec::new();
        loop {
            match self.peek() {
                Some(')') => {
                    self.pos += 1;
                    return Ok(points);
                }
                Some(c) if c.is_ascii_digit() => points.push(self.number()?),
                Some(_) => return self.error("expected a point or `)`"),
                None => return self.error("unterminated cycle"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_families() {
        let e = GroupExpr::parse("C2 x D8").unwrap();
        assert_eq!(
            e,
            GroupExpr::Product(
                Box::new(GroupExpr::Family(Family::Cyclic(2))),
                Box::new(GroupExpr::Family(Family::Dihedral(8)))
            )
        );
        assert_eq!(e.build(64).unwrap().order(), 16);
        assert_eq!(GroupExpr::parse("c 1").unwrap().build(64).unwrap().order(), 1);
        assert_eq!(GroupExpr::parse(" e2 ^ 3 ").unwrap().to_string(), "E2^3");
    }

    #[test]
    fn parses_generators() {
        let e = GroupExpr::parse("gens: (0 1 2 3), (0 2)").unwrap();
        assert_eq!(e.to_string(), "gens: (0 1 2 3), (0 2)");
        assert_eq!(e.build(64).unwrap().order(), 8);
        let e = GroupExpr::parse("gens:(0 1)(2 3),(0 2) x C3").unwrap();
        assert_eq!(e.to_string(), "gens: (0 1)(2 3), (0 2) x C3");
        assert_eq!(e.build(64).unwrap().order(), 24);
    }

    #[test]
    fn products_are_left_associative() {
        let e = GroupExpr::parse("C2 x C2 x C3").unwrap();
        assert!(matches!(&e, GroupExpr::Product(l, _) if matches!(**l, GroupExpr::Product(..))));
        assert_eq!(e.to_string(), "C2 x C2 x C3");
        let e = GroupExpr::parse("C2 x (C2 x C3)").unwrap();
        assert_eq!(e.to_string(), "C2 x (C2 x C3)");
        assert_eq!(GroupExpr::parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn reports_errors_with_positions() {
        assert!(matches!(GroupExpr::parse("C2 x"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(GroupExpr::parse("C2 y"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(GroupExpr::parse("Z5"), Err(Error::UnknownFamily { .. })));
        assert!(matches!(GroupExpr::parse("D7"), Err(Error::InvalidFamily(_))));
        assert!(matches!(GroupExpr::parse("gens: (0 1"), Err(Error::Syntax { .. })));
        assert!(matches!(GroupExpr::parse("gens: (0 0)"), Err(Error::InvalidPermutation(_))));
    }
}
