//! Symmetrization `e: S(g) → U(g)`, its inverse, and the transported product.
//!
//! `U` of the free Lie algebra is represented through [`AssocElement`]s whose
//! letters are Lyndon basis elements. Straightening rewrites any such element
//! into sorted words (a PBW basis) with `ab = ba + [a, b]`; on sorted words
//! `e⁻¹` is computed by descending the filtration, since `e(m)` equals the
//! sorted word of `m` plus terms with fewer letters.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use super::{AssocElement, AssocWord, SymElement, SymMonomial};
use crate::freelie::{bracket, LieElement, LyndonWord};
use crate::rational::{factorial, Q};

thread_local! {
    static SYMMETRIZE_MEMO: RefCell<HashMap<SymMonomial, AssocElement>> = RefCell::new(HashMap::new());
    static STRAIGHTEN_MEMO: RefCell<HashMap<AssocWord, AssocElement>> = RefCell::new(HashMap::new());
    static EINV_MEMO: RefCell<HashMap<AssocWord, SymElement>> = RefCell::new(HashMap::new());
}

/// `e(g_1⋯g_p) = (1/p!) Σ_σ g_σ(1)⋯g_σ(p)`. Repeated factors are summed once
/// per distinct arrangement with the matching multiplicity.
pub fn symmetrize(m: &SymMonomial) -> AssocElement {
    if let Some(hit) = SYMMETRIZE_MEMO.with(|c| c.borrow().get(m).cloned()) {
        return hit;
    }
    let factors = m.factors();
    let mut distinct: Vec<(LyndonWord, usize)> = Vec::new();
    for f in factors {
        match distinct.last_mut() {
            Some((last, count)) if last == f => *count += 1,
            _ => distinct.push((f.clone(), 1)),
        }
    }
    let multiplicity = distinct
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, (_, k)| acc * factorial(*k));
    let coeff = Q::new(multiplicity, factorial(factors.len()));

    let mut out = AssocElement::zero();
    let mut current = Vec::with_capacity(factors.len());
    arrangements(&mut distinct, &mut current, factors.len(), &mut |w| {
        out.add_term(AssocWord(w.to_vec()), coeff.clone());
    });
    SYMMETRIZE_MEMO.with(|c| c.borrow_mut().insert(m.clone(), out.clone()));
    out
}

fn arrangements<F: FnMut(&[LyndonWord])>(
    pool: &mut [(LyndonWord, usize)],
    current: &mut Vec<LyndonWord>,
    total: usize,
    emit: &mut F,
) {
    if current.len() == total {
        emit(current);
        return;
    }
    for i in 0..pool.len() {
        if pool[i].1 == 0 {
            continue;
        }
        pool[i].1 -= 1;
        current.push(pool[i].0.clone());
        arrangements(pool, current, total, emit);
        current.pop();
        pool[i].1 += 1;
    }
}

pub fn symmetrize_element(s: &SymElement) -> AssocElement {
    let mut out = AssocElement::zero();
    for (m, c) in s.terms() {
        out.add_scaled(&symmetrize(m), c);
    }
    out
}

fn straighten_word(w: &AssocWord) -> AssocElement {
    if w.is_sorted() {
        return AssocElement::word(w.clone());
    }
    if let Some(hit) = STRAIGHTEN_MEMO.with(|c| c.borrow().get(w).cloned()) {
        return hit;
    }
    let letters = w.letters();
    let i = (0..letters.len() - 1)
        .find(|&i| letters[i] > letters[i + 1])
        .expect("unsorted word has a descent");

    let mut swapped = letters.to_vec();
    swapped.swap(i, i + 1);
    let mut out = straighten_word(&AssocWord(swapped));

    let commutator = bracket(
        &LieElement::basis(letters[i].clone()),
        &LieElement::basis(letters[i + 1].clone()),
    );
    for (l, c) in commutator.terms() {
        let mut shorter = letters[..i].to_vec();
        shorter.push(l.clone());
        shorter.extend_from_slice(&letters[i + 2..]);
        out.add_scaled(&straighten_word(&AssocWord(shorter)), c);
    }
    STRAIGHTEN_MEMO.with(|c| c.borrow_mut().insert(w.clone(), out.clone()));
    out
}

/// Rewrites `u` in the PBW basis of sorted words.
pub fn straighten(u: &AssocElement) -> AssocElement {
    let mut out = AssocElement::zero();
    for (w, c) in u.terms() {
        out.add_scaled(&straighten_word(w), c);
    }
    out
}

fn e_inverse_sorted(w: &AssocWord) -> SymElement {
    if w.len() <= 1 {
        return SymElement::monomial(SymMonomial::new(w.letters().to_vec()));
    }
    if let Some(hit) = EINV_MEMO.with(|c| c.borrow().get(w).cloned()) {
        return hit;
    }
    let symbol = SymMonomial::new(w.letters().to_vec());
    let mut lower = straighten(&symmetrize(&symbol));
    lower.add_term(w.clone(), -Q::one());
    debug_assert!(lower.max_len().is_none_or(|l| l < w.len()));

    let mut out = SymElement::monomial(symbol);
    out.add_scaled(&e_inverse_pbw(&lower), &-Q::one());
    EINV_MEMO.with(|c| c.borrow_mut().insert(w.clone(), out.clone()));
    out
}

fn e_inverse_pbw(u: &AssocElement) -> SymElement {
    let mut out = SymElement::zero();
    for (w, c) in u.terms() {
        out.add_scaled(&e_inverse_sorted(w), c);
    }
    out
}

/// The unique `s` with `e(s) = u` in `U`.
pub fn e_inverse(u: &AssocElement) -> SymElement {
    e_inverse_pbw(&straighten(u))
}

/// `B(x, y) = e⁻¹(e(x)·e(y))`.
pub fn b_oracle(x: &SymElement, y: &SymElement) -> SymElement {
    let product = &symmetrize_element(x) * &symmetrize_element(y);
    e_inverse(&product)
}

/// Degree `-p` part of `B`, extended bilinearly: on monomials `a`, `b` it is
/// the polynomial-degree `deg a + deg b - p` component of `B(a, b)`.
pub fn b_p_oracle(x: &SymElement, y: &SymElement, p: usize) -> SymElement {
    let mut out = SymElement::zero();
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            let total = a.degree() + b.degree();
            if p > total {
                continue;
            }
            let full = b_oracle(
                &SymElement::monomial(a.clone()),
                &SymElement::monomial(b.clone()),
            );
            out.add_scaled(&full.component(total - p), &(c * d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::Generator;
    use crate::rational::q;

    fn sym(s: &str) -> SymElement {
        s.parse().unwrap()
    }

    fn gens(s: &str) -> Vec<Generator> {
        s.split_whitespace().map(|t| t.parse().unwrap()).collect()
    }

    #[test]
    fn symmetrize_small_cases() {
        let g = SymMonomial::from_generators(&gens("x1"));
        assert_eq!(symmetrize(&g), AssocElement::generator_word(&gens("x1")));

        let xy = SymMonomial::from_generators(&gens("x1 y1"));
        let expected = &AssocElement::generator_word(&gens("x1 y1")).scale(&q(1, 2))
            + &AssocElement::generator_word(&gens("y1 x1")).scale(&q(1, 2));
        assert_eq!(symmetrize(&xy), expected);

        let xx = SymMonomial::from_generators(&gens("x1 x1"));
        assert_eq!(
            symmetrize(&xx),
            AssocElement::generator_word(&gens("x1 x1"))
        );

        assert_eq!(symmetrize(&SymMonomial::unit()), AssocElement::unit());
    }

    #[test]
    fn e_inverse_small_cases() {
        assert_eq!(
            e_inverse(&AssocElement::generator_word(&gens("x1"))),
            sym("x1")
        );
        assert_eq!(
            e_inverse(&AssocElement::generator_word(&gens("x1 y1"))),
            sym("x1·y1 + 1/2·[x1,y1]")
        );
        assert_eq!(e_inverse(&AssocElement::unit()), SymElement::unit());
    }

    #[test]
    fn straighten_produces_sorted_words() {
        let u = AssocElement::generator_word(&gens("y1 x2 x1"));
        let s = straighten(&u);
        assert!(s.terms().all(|(w, _)| w.is_sorted()));
        // Same element of U: flattening both sides into generator words agrees.
        assert_eq!(s.flatten(), u.flatten());
    }

    #[test]
    fn b_oracle_low_degree() {
        assert_eq!(b_oracle(&SymElement::unit(), &sym("y1")), sym("y1"));
        assert_eq!(b_oracle(&sym("x1"), &sym("y1")), sym("x1·y1 + 1/2·[x1,y1]"));
        assert_eq!(b_p_oracle(&sym("x1"), &sym("y1"), 0), sym("x1·y1"));
        assert_eq!(b_p_oracle(&sym("x1"), &sym("y1"), 1), sym("1/2·[x1,y1]"));
        assert!(b_p_oracle(&sym("x1"), &sym("y1"), 3).is_zero());
        assert_eq!(
            b_p_oracle(&sym("x1·x2"), &sym("y1"), 2),
            sym("1/12·[x1,[x2,y1]] + 1/12·[x2,[x1,y1]]")
        );
    }

    #[test]
    fn b_oracle_is_associative_on_a_triple() {
        let (a, b, c) = (sym("x1"), sym("y1"), sym("y2"));
        let left = b_oracle(&b_oracle(&a, &b), &c);
        let right = b_oracle(&a, &b_oracle(&b, &c));
        assert_eq!(left, right);
    }
}
