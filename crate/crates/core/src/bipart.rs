//! Special bipartitions and the closed formula
//! `B_p(x_1⋯x_n, y_1⋯y_m) = Σ_π Π_{(S,T)∈π} w(S, T)`, summed over special
//! bipartitions `π` of `({1..n}, {1..m})` with `n + m - p` parts.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use crate::assoc::SymElement;
use crate::chw::w;
use crate::freelie::{Generator, LieElement, Side};

/// A pair `(S, T)` of an X-index subset and a Y-index subset, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetPair {
    pub xs: Vec<u32>,
    pub ys: Vec<u32>,
}

impl SubsetPair {
    pub fn new(mut xs: Vec<u32>, mut ys: Vec<u32>) -> Self {
        xs.sort_unstable();
        ys.sort_unstable();
        SubsetPair { xs, ys }
    }

    /// `w(S, T)` is defined: a part empty on one side is a singleton on the
    /// other.
    pub fn is_special(&self) -> bool {
        match (self.xs.len(), self.ys.len()) {
            (0, b) => b == 1,
            (a, 0) => a == 1,
            _ => true,
        }
    }

    fn generators(&self) -> (Vec<Generator>, Vec<Generator>) {
        (
            self.xs.iter().map(|&i| Generator::x(i)).collect(),
            self.ys.iter().map(|&j| Generator::y(j)).collect(),
        )
    }
}

impl fmt::Display for SubsetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |v: &[u32]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({{{}}},{{{}}})", render(&self.xs), render(&self.ys))
    }
}

/// A set of parts, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    parts: Vec<SubsetPair>,
}

impl Bipartition {
    pub fn new(mut parts: Vec<SubsetPair>) -> Self {
        parts.sort();
        Bipartition { parts }
    }

    pub fn parts(&self) -> &[SubsetPair] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_special(&self) -> bool {
        self.parts.iter().all(SubsetPair::is_special)
    }

    /// Coordinatewise disjoint and covering `({1..n}, {1..m})`, with no
    /// `(∅, ∅)` part.
    pub fn is_bipartition_of(&self, n: u32, m: u32) -> bool {
        let mut xs: Vec<u32> = self.parts.iter().flat_map(|p| p.xs.clone()).collect();
        let mut ys: Vec<u32> = self.parts.iter().flat_map(|p| p.ys.clone()).collect();
        xs.sort_unstable();
        ys.sort_unstable();
        xs == (1..=n).collect::<Vec<_>>()
            && ys == (1..=m).collect::<Vec<_>>()
            && self
                .parts
                .iter()
                .all(|p| !(p.xs.is_empty() && p.ys.is_empty()))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn elems(mask: u32) -> Vec<u32> {
    (0..32)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

fn submasks(mask: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut sub = mask;
    loop {
        out.push(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    out
}

// The part holding the least uncovered x is chosen first; once every x is
// covered the remaining y's can only sit in singleton parts (∅, {y}).
fn enumerate(
    rem_x: u32,
    rem_y: u32,
    size: usize,
    parts: &mut Vec<SubsetPair>,
    out: &mut Vec<Bipartition>,
) {
    if parts.len() > size {
        return;
    }
    if rem_x == 0 {
        if parts.len() + rem_y.count_ones() as usize == size {
            let mut all = parts.clone();
            all.extend(
                elems(rem_y)
                    .into_iter()
                    .map(|j| SubsetPair::new(vec![], vec![j])),
            );
            out.push(Bipartition::new(all));
        }
        return;
    }
    let lowest = rem_x & rem_x.wrapping_neg();
    for extra in submasks(rem_x & !lowest) {
        let xs = lowest | extra;
        for ys in submasks(rem_y) {
            if ys == 0 && xs.count_ones() >= 2 {
                continue;
            }
            parts.push(SubsetPair::new(elems(xs), elems(ys)));
            enumerate(rem_x & !xs, rem_y & !ys, size, parts, out);
            parts.pop();
        }
    }
}

/// Every special bipartition of `({1..n}, {1..m})` with exactly `size` parts,
/// each once.
pub fn special_bipartitions(n: u32, m: u32, size: usize) -> Vec<Bipartition> {
    assert!(n + m <= 31, "alphabet too large");
    let mut out = Vec::new();
    let mut parts = Vec::new();
    enumerate((1u32 << n) - 1, (1u32 << m) - 1, size, &mut parts, &mut out);
    out
}

thread_local! {
    static BP_MEMO: RefCell<HashMap<(u32, u32, usize), SymElement>> = RefCell::new(HashMap::new());
}

/// `B_p(x_1⋯x_n, y_1⋯y_m)` on the standard generators by the bipartition sum.
/// Zero when `p > n + m`; `n` or `m` may be zero.
pub fn b_p_formula(n: u32, m: u32, p: usize) -> SymElement {
    let total = (n + m) as usize;
    if p > total {
        return SymElement::zero();
    }
    if let Some(hit) = BP_MEMO.with(|c| c.borrow().get(&(n, m, p)).cloned()) {
        return hit;
    }
    let mut w_cache: HashMap<SubsetPair, SymElement> = HashMap::new();
    let mut out = SymElement::zero();
    for pi in special_bipartitions(n, m, total - p) {
        let mut prod = SymElement::unit();
        for part in pi.parts() {
            let factor = w_cache.entry(part.clone()).or_insert_with(|| {
                let (a, b) = part.generators();
                SymElement::from_lie(&w(&a, &b).expect("special parts have w defined"))
            });
            prod = &prod * factor;
        }
        out.add_scaled(&prod, &num_traits::One::one());
    }
    BP_MEMO.with(|c| c.borrow_mut().insert((n, m, p), out.clone()));
    out
}

/// `B_p(f_1⋯f_n, g_1⋯g_m)` for arbitrary Lie elements `f_i`, `g_j`, by
/// pushing the free formula through `x_i ↦ f_i`, `y_j ↦ g_j`.
pub fn b_p_formula_on(left: &[LieElement], right: &[LieElement], p: usize) -> SymElement {
    let template = b_p_formula(left.len() as u32, right.len() as u32, p);
    template.substitute(&|g: Generator| match g.side {
        Side::X => left[g.index as usize - 1].clone(),
        Side::Y => right[g.index as usize - 1].clone(),
    })
}

/// Bilinear extension of [`b_p_formula_on`] to all of `S(g)`.
pub fn b_p_formula_sym(x: &SymElement, y: &SymElement, p: usize) -> SymElement {
    let mut out = SymElement::zero();
    for (a, c) in x.terms() {
        let left: Vec<LieElement> = a.factors().iter().cloned().map(LieElement::basis).collect();
        for (b, d) in y.terms() {
            let right: Vec<LieElement> =
                b.factors().iter().cloned().map(LieElement::basis).collect();
            out.add_scaled(&b_p_formula_on(&left, &right, p), &(c * d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> SymElement {
        s.parse().unwrap()
    }

    fn pair(xs: &[u32], ys: &[u32]) -> SubsetPair {
        SubsetPair::new(xs.to_vec(), ys.to_vec())
    }

    #[test]
    fn single_pair_bipartitions() {
        let two = special_bipartitions(1, 1, 2);
        assert_eq!(
            two,
            vec![Bipartition::new(vec![pair(&[1], &[]), pair(&[], &[1])])]
        );
        let one = special_bipartitions(1, 1, 1);
        assert_eq!(one, vec![Bipartition::new(vec![pair(&[1], &[1])])]);
    }

    #[test]
    fn two_x_one_y_size_two() {
        let got = special_bipartitions(2, 1, 2);
        let mut expected = vec![
            Bipartition::new(vec![pair(&[1], &[1]), pair(&[2], &[])]),
            Bipartition::new(vec![pair(&[2], &[1]), pair(&[1], &[])]),
        ];
        expected.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, expected);
    }

    #[test]
    fn all_singletons_is_unique() {
        for (n, m) in [(1, 1), (2, 3), (3, 2), (4, 1)] {
            let all = special_bipartitions(n, m, (n + m) as usize);
            assert_eq!(all.len(), 1);
            assert!(all[0].parts().iter().all(|p| p.xs.len() + p.ys.len() == 1));
        }
    }

    #[test]
    fn enumerated_bipartitions_are_valid_and_distinct() {
        for (n, m) in [(2, 2), (3, 2), (1, 4)] {
            for size in 1..=(n + m) as usize {
                let list = special_bipartitions(n, m, size);
                for pi in &list {
                    assert!(pi.is_bipartition_of(n, m));
                    assert!(pi.is_special());
                    assert_eq!(pi.len(), size);
                }
                let mut dedup = list.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), list.len());
            }
        }
    }

    #[test]
    fn low_degree_formula_values() {
        assert_eq!(b_p_formula(1, 1, 0), sym("x1·y1"));
        assert_eq!(b_p_formula(1, 1, 1), sym("1/2·[x1,y1]"));
        assert_eq!(b_p_formula(2, 1, 1), sym("1/2·x2·[x1,y1] + 1/2·x1·[x2,y1]"));
        assert_eq!(
            b_p_formula(2, 1, 2),
            sym("1/12·[x1,[x2,y1]] + 1/12·[x2,[x1,y1]]")
        );
        assert!(b_p_formula(1, 1, 3).is_zero());
        assert_eq!(b_p_formula(0, 2, 0), sym("y1·y2"));
        assert!(b_p_formula(0, 2, 1).is_zero());
    }

    #[test]
    fn top_component_is_w() {
        let top = b_p_formula(2, 2, 3);
        let direct = w(
            &[Generator::x(1), Generator::x(2)],
            &[Generator::y(1), Generator::y(2)],
        )
        .unwrap();
        assert_eq!(top, SymElement::from_lie(&direct));
    }

    #[test]
    fn repeated_letters_through_substitution() {
        let x1: LieElement = "x1".parse().unwrap();
        let y1: LieElement = "y1".parse().unwrap();
        let got = b_p_formula_on(&[x1.clone(), x1], &[y1], 1);
        assert_eq!(got, sym("x1·[x1,y1]"));
    }
}
