use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::freelie::{Generator, LieElement, LyndonWord};
use crate::rational::{self, Q};

/// A word whose letters are Lyndon basis elements of the free Lie algebra.
/// Letters may be brackets, so these span the tensor algebra over `g`; the
/// empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssocWord(pub Vec<LyndonWord>);

impl AssocWord {
    pub fn unit() -> Self {
        AssocWord(Vec::new())
    }

    pub fn from_generators(gens: &[Generator]) -> Self {
        AssocWord(gens.iter().map(|&g| LyndonWord::letter(g)).collect())
    }

    pub fn letters(&self) -> &[LyndonWord] {
        &self.0
    }

    /// Number of letters: the filtration degree in `U`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of generators across all letters.
    pub fn weight(&self) -> usize {
        self.0.iter().map(LyndonWord::degree).sum()
    }

    pub fn concat(&self, other: &AssocWord) -> AssocWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        AssocWord(v)
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for AssocWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssocElement {
    terms: BTreeMap<AssocWord, Q>,
}

impl AssocElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::word(AssocWord::unit())
    }

    pub fn word(w: AssocWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, Q::one());
        e
    }

    pub fn generator_word(gens: &[Generator]) -> Self {
        Self::word(AssocWord::from_generators(gens))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AssocWord, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &AssocWord) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: AssocWord, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &AssocElement, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Q) -> AssocElement {
        let mut out = AssocElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Maximum number of letters, `None` for zero.
    pub fn max_len(&self) -> Option<usize> {
        self.terms.keys().map(AssocWord::len).max()
    }

    /// Rewrites every bracket letter through the embedding, leaving words in
    /// generator letters only.
    pub fn flatten(&self) -> AssocElement {
        let mut out = AssocElement::zero();
        for (w, c) in &self.terms {
            let mut prod = AssocElement::unit();
            for letter in w.letters() {
                prod = &prod * &embed_basis(letter);
            }
            out.add_scaled(&prod, c);
        }
        out
    }
}

thread_local! {
    static EMBED_MEMO: RefCell<HashMap<LyndonWord, AssocElement>> = RefCell::new(HashMap::new());
}

fn embed_basis(w: &LyndonWord) -> AssocElement {
    if let Some(g) = w.as_generator() {
        return AssocElement::generator_word(&[g]);
    }
    if let Some(hit) = EMBED_MEMO.with(|m| m.borrow().get(w).cloned()) {
        return hit;
    }
    let (u, v) = w.standard_factorization().expect("degree >= 2");
    let a = embed_basis(&u);
    let b = embed_basis(&v);
    let result = &(&a * &b) - &(&b * &a);
    EMBED_MEMO.with(|m| m.borrow_mut().insert(w.clone(), result.clone()));
    result
}

/// The embedding of the free Lie algebra into the free associative algebra
/// on generators, `[a, b] ↦ ab - ba`.
pub fn embed(e: &LieElement) -> AssocElement {
    let mut out = AssocElement::zero();
    for (w, c) in e.terms() {
        out.add_scaled(&embed_basis(w), c);
    }
    out
}

impl<'a> Mul<&'a AssocElement> for &'a AssocElement {
    type Output = AssocElement;
    fn mul(self, rhs: &AssocElement) -> AssocElement {
        let mut out = AssocElement::zero();
        for (u, c) in &self.terms {
            for (v, d) in &rhs.terms {
                out.add_term(u.concat(v), c * d);
            }
        }
        out
    }
}

impl<'a> Add<&'a AssocElement> for &'a AssocElement {
    type Output = AssocElement;
    fn add(self, rhs: &AssocElement) -> AssocElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl<'a> Sub<&'a AssocElement> for &'a AssocElement {
    type Output = AssocElement;
    fn sub(self, rhs: &AssocElement) -> AssocElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl fmt::Display for AssocElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        rational::write_terms(f, "·", self.terms.iter().map(|(w, c)| (c, w.to_string())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_of_brackets() {
        let e: LieElement = "[x1,y1]".parse().unwrap();
        let x1y1 = AssocElement::generator_word(&[Generator::x(1), Generator::y(1)]);
        let y1x1 = AssocElement::generator_word(&[Generator::y(1), Generator::x(1)]);
        assert_eq!(embed(&e), &x1y1 - &y1x1);
        assert_eq!(embed(&e).to_string(), "x1 y1 - y1 x1");
    }

    #[test]
    fn flatten_expands_bracket_letters() {
        let br = LyndonWord::new(vec![Generator::x(1), Generator::y(1)]).unwrap();
        let w = AssocElement::word(AssocWord(vec![
            br.clone(),
            LyndonWord::letter(Generator::x(2)),
        ]));
        let flat = w.flatten();
        let expected = &(&embed(&LieElement::basis(br))
            * &AssocElement::generator_word(&[Generator::x(2)]))
            + &AssocElement::zero();
        assert_eq!(flat, expected);
        assert!(flat
            .terms()
            .all(|(w, _)| w.letters().iter().all(|l| l.degree() == 1)));
    }
}
