use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{Alphabet, Generator, LieMonomial, LyndonWord, MultiIndex};
use crate::rational::{self, Q};
use crate::{Error, Result};

/// Rational combination of Lyndon basis elements. Zero coefficients are never
/// stored, so structural equality is equality in the free Lie algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<LyndonWord, Q>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: LyndonWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Q::one());
        LieElement { terms }
    }

    pub fn generator(g: Generator) -> Self {
        Self::basis(LyndonWord::letter(g))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LyndonWord, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &LyndonWord) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: LyndonWord, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LieElement, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Q) -> LieElement {
        if c.is_zero() {
            return LieElement::zero();
        }
        LieElement {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect(),
        }
    }

    /// `Some(d)` if every basis element has degree `d`; `None` for zero or
    /// mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(LyndonWord::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Image under the Lie morphism determined by `f` on generators.
    pub fn substitute<F>(&self, f: &F) -> LieElement
    where
        F: Fn(Generator) -> LieElement,
    {
        let mut memo: HashMap<LyndonWord, LieElement> = HashMap::new();
        let mut out = LieElement::zero();
        for (w, c) in &self.terms {
            let image = substitute_basis(w, f, &mut memo);
            out.add_scaled(&image, c);
        }
        out
    }
}

fn substitute_basis<F>(
    w: &LyndonWord,
    f: &F,
    memo: &mut HashMap<LyndonWord, LieElement>,
) -> LieElement
where
    F: Fn(Generator) -> LieElement,
{
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let image = match w.standard_factorization() {
        None => f(w.letters()[0]),
        Some((u, v)) => {
            let a = substitute_basis(&u, f, memo);
            let b = substitute_basis(&v, f, memo);
            bracket(&a, &b)
        }
    };
    memo.insert(w.clone(), image.clone());
    image
}

thread_local! {
    static BRACKET_MEMO: RefCell<HashMap<(LyndonWord, LyndonWord), LieElement>> =
        RefCell::new(HashMap::new());
}

/// `[P(u), P(v)]` expanded in the Lyndon basis.
fn bracket_basis(u: &LyndonWord, v: &LyndonWord) -> LieElement {
    use std::cmp::Ordering::*;
    match u.cmp(v) {
        Equal => LieElement::zero(),
        Greater => -bracket_basis(v, u),
        Less => {
            let key = (u.clone(), v.clone());
            if let Some(hit) = BRACKET_MEMO.with(|m| m.borrow().get(&key).cloned()) {
                return hit;
            }
            let result = bracket_basis_ordered(u, v);
            BRACKET_MEMO.with(|m| m.borrow_mut().insert(key, result.clone()));
            result
        }
    }
}

// For u < v Lyndon, uv is Lyndon and its standard factorization is (u, v)
// exactly when u is a letter or the right standard factor of u is >= v.
// Otherwise u = u'u'' with u'' < v and Jacobi gives
// [[u',u''],v] = [u',[u'',v]] - [u'',[u',v]].
fn bracket_basis_ordered(u: &LyndonWord, v: &LyndonWord) -> LieElement {
    match u.standard_factorization() {
        None => LieElement::basis(LyndonWord::concat_unchecked(u, v)),
        Some((_, ref u2)) if u2 >= v => LieElement::basis(LyndonWord::concat_unchecked(u, v)),
        Some((u1, u2)) => {
            let inner_a = bracket_basis(&u2, v);
            let inner_b = bracket_basis(&u1, v);
            let a = bracket(&LieElement::basis(u1), &inner_a);
            let b = bracket(&LieElement::basis(u2), &inner_b);
            a - b
        }
    }
}

/// Bilinear extension of the basis bracket.
pub fn bracket(a: &LieElement, b: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (u, c) in &a.terms {
        for (v, d) in &b.terms {
            let uv = bracket_basis(u, v);
            out.add_scaled(&uv, &(c * d));
        }
    }
    out
}

/// Expands an arbitrary bracketing in the Lyndon basis.
pub fn normalize(t: &LieMonomial) -> LieElement {
    match t {
        LieMonomial::Leaf(g) => LieElement::generator(*g),
        LieMonomial::Bracket(a, b) => bracket(&normalize(a), &normalize(b)),
    }
}

/// `ad(g_1) ∘ … ∘ ad(g_k)` applied to `target`.
pub fn ad_sequence(gens: &[Generator], target: &LieElement) -> LieElement {
    gens.iter().rev().fold(target.clone(), |acc, &g| {
        bracket(&LieElement::generator(g), &acc)
    })
}

/// `ad(x)^α` applied to `target`, with `α` indexing the side of the alphabet
/// it carries.
pub fn ad_chain(alphabet: Alphabet, alpha: &MultiIndex, target: &LieElement) -> Result<LieElement> {
    let gens: Vec<Generator> = alpha.generators().collect();
    for &g in &gens {
        alphabet.check(g)?;
    }
    Ok(ad_sequence(&gens, target))
}

impl From<Generator> for LieElement {
    fn from(g: Generator) -> Self {
        LieElement::generator(g)
    }
}

impl Neg for LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl AddAssign<&LieElement> for LieElement {
    fn add_assign(&mut self, rhs: &LieElement) {
        self.add_scaled(rhs, &Q::one());
    }
}

impl SubAssign<&LieElement> for LieElement {
    fn sub_assign(&mut self, rhs: &LieElement) {
        self.add_scaled(rhs, &-Q::one());
    }
}

impl Add for LieElement {
    type Output = LieElement;
    fn add(mut self, rhs: LieElement) -> LieElement {
        self += &rhs;
        self
    }
}

impl Sub for LieElement {
    type Output = LieElement;
    fn sub(mut self, rhs: LieElement) -> LieElement {
        self -= &rhs;
        self
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        rational::write_terms(f, "·", self.terms.iter().map(|(w, c)| (c, w.to_string())))
    }
}

impl FromStr for LieElement {
    type Err = Error;

    /// Accepts the rendered form, e.g. `1/2·[x1,y1] - [x1,[x1,y1]]`. Bracket
    /// expressions need not be canonical; they are normalized.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = LieElement::zero();
        for (c, body) in rational::split_terms(s, "·")? {
            if body.is_empty() {
                return Err(Error::Parse(format!("constant term in Lie element `{s}`")));
            }
            let t: LieMonomial = body.parse()?;
            out.add_scaled(&normalize(&t), &c);
        }
        Ok(out)
    }
}
