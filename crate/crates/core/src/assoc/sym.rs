use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::freelie::{normalize, Generator, LieElement, LieMonomial, LyndonWord};
use crate::rational::{self, Q};
use crate::{Error, Result};

/// A commutative monomial in `S(g)`: a sorted multiset of Lie basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMonomial(Vec<LyndonWord>);

impl SymMonomial {
    pub fn unit() -> Self {
        SymMonomial(Vec::new())
    }

    pub fn new(mut factors: Vec<LyndonWord>) -> Self {
        factors.sort();
        SymMonomial(factors)
    }

    pub fn from_generators(gens: &[Generator]) -> Self {
        Self::new(gens.iter().map(|&g| LyndonWord::letter(g)).collect())
    }

    pub fn factors(&self) -> &[LyndonWord] {
        &self.0
    }

    /// Polynomial degree: the number of factors, so `S^p` has degree `p`.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Number of generators counted through every bracket factor.
    pub fn weight(&self) -> usize {
        self.0.iter().map(LyndonWord::degree).sum()
    }

    pub fn mul(&self, other: &SymMonomial) -> SymMonomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SymMonomial::new(v)
    }

    /// The generators of a monomial whose factors are all degree one.
    pub fn generators(&self) -> Option<Vec<Generator>> {
        self.0.iter().map(LyndonWord::as_generator).collect()
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("·"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymElement {
    terms: BTreeMap<SymMonomial, Q>,
}

impl SymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::monomial(SymMonomial::unit())
    }

    pub fn monomial(m: SymMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, Q::one());
        e
    }

    pub fn generators(gens: &[Generator]) -> Self {
        Self::monomial(SymMonomial::from_generators(gens))
    }

    /// A Lie element viewed in `S^1`.
    pub fn from_lie(e: &LieElement) -> Self {
        let mut out = Self::zero();
        for (w, c) in e.terms() {
            out.add_term(SymMonomial(vec![w.clone()]), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &SymMonomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: SymMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &SymElement, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Q) -> SymElement {
        let mut out = SymElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(SymMonomial::degree).max()
    }

    /// The part of polynomial degree exactly `d`.
    pub fn component(&self, d: usize) -> SymElement {
        SymElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// True if every monomial has polynomial degree `d` (vacuous for zero).
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Image under the algebra map induced by the Lie morphism `f`.
    pub fn substitute<F>(&self, f: &F) -> SymElement
    where
        F: Fn(Generator) -> LieElement,
    {
        let mut out = SymElement::zero();
        for (m, c) in &self.terms {
            let mut prod = SymElement::unit();
            for factor in m.factors() {
                let image = LieElement::basis(factor.clone()).substitute(f);
                prod = &prod * &SymElement::from_lie(&image);
                if prod.is_zero() {
                    break;
                }
            }
            out.add_scaled(&prod, c);
        }
        out
    }

    /// Machine-readable tree: coefficients as `p/q` strings, monomials as
    /// sorted lists of bracket strings.
    pub fn to_tree(&self) -> SymTree {
        SymTree {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| SymTerm {
                    coeff: rational::render(c),
                    monomial: m.factors().iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }
    }

    pub fn from_tree(tree: &SymTree) -> Result<SymElement> {
        let mut out = SymElement::zero();
        for term in &tree.terms {
            let c = rational::parse(&term.coeff)?;
            let factors: Vec<&str> = term.monomial.iter().map(String::as_str).collect();
            out.add_scaled(&product_of_factors(&factors)?, &c);
        }
        Ok(out)
    }
}

fn product_of_factors(factors: &[&str]) -> Result<SymElement> {
    let mut prod = SymElement::unit();
    for f in factors {
        let t: LieMonomial = f.parse()?;
        prod = &prod * &SymElement::from_lie(&normalize(&t));
    }
    Ok(prod)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymTree {
    pub terms: Vec<SymTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymTerm {
    pub coeff: String,
    pub monomial: Vec<String>,
}

impl<'a> Mul<&'a SymElement> for &'a SymElement {
    type Output = SymElement;
    fn mul(self, rhs: &SymElement) -> SymElement {
        let mut out = SymElement::zero();
        for (u, c) in &self.terms {
            for (v, d) in &rhs.terms {
                out.add_term(u.mul(v), c * d);
            }
        }
        out
    }
}

impl<'a> Add<&'a SymElement> for &'a SymElement {
    type Output = SymElement;
    fn add(self, rhs: &SymElement) -> SymElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl<'a> Sub<&'a SymElement> for &'a SymElement {
    type Output = SymElement;
    fn sub(self, rhs: &SymElement) -> SymElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        rational::write_terms(f, "·", self.terms.iter().map(|(m, c)| (c, m.to_string())))
    }
}

impl FromStr for SymElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = SymElement::zero();
        for (c, body) in rational::split_terms(s, "·")? {
            let factors: Vec<&str> = if body.is_empty() || body == "1" {
                Vec::new()
            } else {
                body.split('·').collect()
            };
            out.add_scaled(&product_of_factors(&factors)?, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn text_round_trip() {
        let e: SymElement = "x1·y1 + 1/2·[x1,y1]".parse().unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.to_string(), "x1·y1 + 1/2·[x1,y1]");
        let back: SymElement = e.to_string().parse().unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn non_canonical_factors_are_normalized() {
        let e: SymElement = "[y1,x1]·x2".parse().unwrap();
        let f: SymElement = "-x2·[x1,y1]".parse().unwrap();
        assert_eq!(e, f);
    }

    #[test]
    fn constants_and_grading() {
        let e: SymElement = "2 - 1/3·x1·x1".parse().unwrap();
        assert_eq!(e.coefficient(&SymMonomial::unit()), q(2, 1));
        assert_eq!(e.component(2).len(), 1);
        assert_eq!(e.max_degree(), Some(2));
        let m = SymMonomial::from_generators(&[Generator::y(1), Generator::x(1)]);
        assert_eq!(m.to_string(), "x1·y1");
        assert_eq!(m.degree(), 2);
    }

    #[test]
    fn tree_round_trip() {
        let e: SymElement = "x1·y1 - 1/12·[x1,[x2,y1]]".parse().unwrap();
        let tree = e.to_tree();
        assert_eq!(tree.terms[1].coeff, "-1/12");
        assert_eq!(SymElement::from_tree(&tree).unwrap(), e);
    }
}
