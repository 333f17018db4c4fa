use std::fmt;
use std::str::FromStr;

use super::{is_lyndon, Generator, LyndonWord};
use crate::{Error, Result};

/// An arbitrary bracketing of generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieMonomial {
    Leaf(Generator),
    Bracket(Box<LieMonomial>, Box<LieMonomial>),
}

impl LieMonomial {
    pub fn bracket(left: LieMonomial, right: LieMonomial) -> Self {
        LieMonomial::Bracket(Box::new(left), Box::new(right))
    }

    pub fn degree(&self) -> usize {
        match self {
            LieMonomial::Leaf(_) => 1,
            LieMonomial::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn leaves(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Generator>) {
        match self {
            LieMonomial::Leaf(g) => out.push(*g),
            LieMonomial::Bracket(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// True iff this is the standard bracketing of a Lyndon word.
    pub fn is_canonical(&self) -> bool {
        let leaves = self.leaves();
        is_lyndon(&leaves)
            && LyndonWord::new(leaves)
                .map(|w| &w.to_tree() == self)
                .unwrap_or(false)
    }
}

impl fmt::Display for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieMonomial::Leaf(g) => write!(f, "{g}"),
            LieMonomial::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl FromStr for LieMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(tree)
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<LieMonomial> {
    match chars.get(*pos) {
        Some('[') => {
            *pos += 1;
            let left = parse_tree(chars, pos)?;
            expect(chars, pos, ',')?;
            let right = parse_tree(chars, pos)?;
            expect(chars, pos, ']')?;
            Ok(LieMonomial::bracket(left, right))
        }
        Some(_) => {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_alphanumeric() {
                *pos += 1;
            }
            let token: String = chars[start..*pos].iter().collect();
            Ok(LieMonomial::Leaf(token.parse()?))
        }
        None => Err(Error::Parse("unexpected end of bracket expression".into())),
    }
}

fn expect(chars: &[char], pos: &mut usize, c: char) -> Result<()> {
    if chars.get(*pos) == Some(&c) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::Parse(format!("expected `{c}` at offset {pos}")))
    }
}
