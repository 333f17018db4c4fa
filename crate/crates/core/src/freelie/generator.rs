use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::X => 'x',
            Side::Y => 'y',
        }
    }
}

/// A free generator `x_i` or `y_j`. The derived order puts every `x` before
/// every `y`, then compares indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub side: Side,
    pub index: u32,
}

impl Generator {
    pub fn new(side: Side, index: u32) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Generator { side, index }
    }

    pub fn x(index: u32) -> Self {
        Self::new(Side::X, index)
    }

    pub fn y(index: u32) -> Self {
        Self::new(Side::Y, index)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.letter(), self.index)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let side = match s.chars().next() {
            Some('x') => Side::X,
            Some('y') => Side::Y,
            _ => return Err(Error::Parse(format!("bad generator `{s}`"))),
        };
        let index: u32 = s[1..]
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator index in `{s}`")))?;
        if index == 0 {
            return Err(Error::Parse(format!("generator indices start at 1: `{s}`")));
        }
        Ok(Generator { side, index })
    }
}

/// Sizes of the two generator sets `X = {x1..xn}` and `Y = {y1..ym}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    pub n: u32,
    pub m: u32,
}

impl Alphabet {
    pub fn new(n: u32, m: u32) -> Self {
        Alphabet { n, m }
    }

    pub fn contains(&self, g: Generator) -> bool {
        g.index >= 1
            && match g.side {
                Side::X => g.index <= self.n,
                Side::Y => g.index <= self.m,
            }
    }

    pub fn check(&self, g: Generator) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                generator: g,
                n: self.n,
                m: self.m,
            })
        }
    }

    pub fn xs(&self) -> Vec<Generator> {
        (1..=self.n).map(Generator::x).collect()
    }

    pub fn ys(&self) -> Vec<Generator> {
        (1..=self.m).map(Generator::y).collect()
    }

    /// All generators in increasing order.
    pub fn generators(&self) -> Vec<Generator> {
        let mut g = self.xs();
        g.extend(self.ys());
        g
    }
}

/// An injective sequence of 1-based indices into one side of the alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    side: Side,
    entries: Vec<u32>,
}

impl MultiIndex {
    pub fn new(side: Side, entries: Vec<u32>) -> Result<Self> {
        let mut seen = entries.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != entries.len() || entries.contains(&0) {
            return Err(Error::NotInjective(entries));
        }
        Ok(MultiIndex { side, entries })
    }

    pub fn empty(side: Side) -> Self {
        MultiIndex {
            side,
            entries: Vec::new(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn image(&self) -> std::collections::BTreeSet<u32> {
        self.entries.iter().copied().collect()
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.entries
            .iter()
            .map(move |&i| Generator::new(self.side, i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_puts_x_before_y() {
        assert!(Generator::x(5) < Generator::y(1));
        assert!(Generator::x(1) < Generator::x(2));
        assert!(Generator::y(1) < Generator::y(3));
    }

    #[test]
    fn parse_and_render() {
        let g: Generator = "y12".parse().unwrap();
        assert_eq!(g, Generator::y(12));
        assert_eq!(g.to_string(), "y12");
        assert!("z1".parse::<Generator>().is_err());
        assert!("x0".parse::<Generator>().is_err());
    }

    #[test]
    fn multi_index_must_be_injective() {
        assert!(MultiIndex::new(Side::X, vec![1, 2, 1]).is_err());
        let a = MultiIndex::new(Side::X, vec![3, 1]).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.image().into_iter().collect::<Vec<_>>(), vec![1, 3]);
    }
}
