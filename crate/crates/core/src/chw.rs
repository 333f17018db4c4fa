//! The multilinear Campbell–Hausdorff coefficient `w(A, B)`, evaluated by
//! enumerating Dynkin's ad-chains over injective multi-indices.
//!
//! `w(A, B) = (w' + w'') / (#A + #B)` where
//!
//! * `w'` sums `(-1)^{p+1}/p · ad(x)^{α_1} ad(y)^{β_1} ⋯ ad(x)^{α_p}(y_k) / Π|α_i|!|β_i|!`
//!   with the `α_i` covering `A` and the `β_j` covering `B \ {k}`;
//! * `w''` sums `(-1)^{p+1}/p · ad(x)^{α_1} ad(y)^{β_1} ⋯ ad(y)^{β_{p-1}}(x_k) / Π|α_i|!|β_i|!`
//!   with the `α_i` covering `A \ {k}` and the `β_j` covering `B`.
//!
//! In both, every block `(α_i, β_i)` with `i < p` is nonempty. The final
//! `α_p` of `w'` may be empty: the chain then ends `⋯ad(y)^{β_{p-1}}(y_k)`.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::freelie::{ad_sequence, Generator, LieElement, MultiIndex, Side};
use crate::rational::{factorial, q, sign, Q};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Chains ending in a `y` pivot.
    WPrime,
    /// Chains ending in an `x` pivot.
    WDoublePrime,
}

/// One admissible summand of `w'` or `w''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTerm {
    pub p: usize,
    pub alphas: Vec<MultiIndex>,
    pub betas: Vec<MultiIndex>,
    pub pivot: u32,
    pub variant: Variant,
}

impl ChainTerm {
    pub fn coefficient(&self) -> Q {
        let denom = self
            .alphas
            .iter()
            .chain(&self.betas)
            .fold(num_bigint::BigInt::one(), |acc, a| acc * factorial(a.len()));
        sign(self.p + 1) * q(1, self.p as i64) / Q::from_integer(denom)
    }

    /// Indices applied by `ad`, outermost first: `α_1, β_1, α_2, …`.
    pub fn ad_indices(&self) -> Vec<(Side, u32)> {
        let mut out = Vec::new();
        for i in 0..self.alphas.len().max(self.betas.len()) {
            if let Some(a) = self.alphas.get(i) {
                out.extend(a.entries().iter().map(|&e| (Side::X, e)));
            }
            if let Some(b) = self.betas.get(i) {
                out.extend(b.entries().iter().map(|&e| (Side::Y, e)));
            }
        }
        out
    }

    /// The ad-chain (without coefficient) with `x_i ↦ left[i-1]` and
    /// `y_j ↦ right[j-1]`.
    pub fn evaluate(&self, left: &[Generator], right: &[Generator]) -> LieElement {
        let pick = |(side, i): (Side, u32)| match side {
            Side::X => left[i as usize - 1],
            Side::Y => right[i as usize - 1],
        };
        let gens: Vec<Generator> = self.ad_indices().into_iter().map(pick).collect();
        let pivot = match self.variant {
            Variant::WPrime => right[self.pivot as usize - 1],
            Variant::WDoublePrime => left[self.pivot as usize - 1],
        };
        ad_sequence(&gens, &LieElement::generator(pivot))
    }
}

fn mask_elems(mask: u32) -> Vec<u32> {
    (0..32)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(current)
    })
}

fn orderings(elems: &[u32]) -> Vec<Vec<u32>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &e) in elems.iter().enumerate() {
        let mut rest = elems.to_vec();
        rest.remove(i);
        for mut tail in orderings(&rest) {
            tail.insert(0, e);
            out.push(tail);
        }
    }
    out
}

struct Enumerator {
    variant: Variant,
    pivot: u32,
    alphas: Vec<MultiIndex>,
    betas: Vec<MultiIndex>,
    out: Vec<ChainTerm>,
}

impl Enumerator {
    fn run(&mut self, rem_x: u32, rem_y: u32) {
        // close the chain
        match self.variant {
            Variant::WPrime if rem_y == 0 => {
                for last in orderings(&mask_elems(rem_x)) {
                    let mut alphas = self.alphas.clone();
                    alphas.push(MultiIndex::new(Side::X, last).expect("injective"));
                    self.out.push(ChainTerm {
                        p: alphas.len(),
                        alphas,
                        betas: self.betas.clone(),
                        pivot: self.pivot,
                        variant: self.variant,
                    });
                }
            }
            Variant::WDoublePrime if rem_x == 0 && rem_y == 0 => {
                self.out.push(ChainTerm {
                    p: self.alphas.len() + 1,
                    alphas: self.alphas.clone(),
                    betas: self.betas.clone(),
                    pivot: self.pivot,
                    variant: self.variant,
                });
            }
            _ => {}
        }
        // or add another nonempty block (α_i, β_i)
        for a in submasks(rem_x) {
            for b in submasks(rem_y) {
                if a == 0 && b == 0 {
                    continue;
                }
                let a_elems = mask_elems(a);
                let b_elems = mask_elems(b);
                for alpha in orderings(&a_elems) {
                    for beta in orderings(&b_elems) {
                        self.alphas
                            .push(MultiIndex::new(Side::X, alpha.clone()).expect("injective"));
                        self.betas
                            .push(MultiIndex::new(Side::Y, beta).expect("injective"));
                        self.run(rem_x & !a, rem_y & !b);
                        self.alphas.pop();
                        self.betas.pop();
                    }
                }
            }
        }
    }
}

/// Every admissible chain of `w'` (`WPrime`) or `w''` (`WDoublePrime`) for
/// `X = {1..n}`, `Y = {1..m}`, each exactly once.
pub fn enumerate_chains(n: u32, m: u32, variant: Variant) -> Result<Vec<ChainTerm>> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "chain sums need n, m >= 1 (got n = {n}, m = {m})"
        )));
    }
    if n + m > 31 {
        return Err(Error::InvalidArgument("alphabet too large".into()));
    }
    let full_x = (1u32 << n) - 1;
    let full_y = (1u32 << m) - 1;
    let mut out = Vec::new();
    let pivots = match variant {
        Variant::WPrime => m,
        Variant::WDoublePrime => n,
    };
    for k in 1..=pivots {
        let bit = 1u32 << (k - 1);
        let (rem_x, rem_y) = match variant {
            Variant::WPrime => (full_x, full_y & !bit),
            Variant::WDoublePrime => (full_x & !bit, full_y),
        };
        let mut e = Enumerator {
            variant,
            pivot: k,
            alphas: Vec::new(),
            betas: Vec::new(),
            out: Vec::new(),
        };
        e.run(rem_x, rem_y);
        out.append(&mut e.out);
    }
    Ok(out)
}

thread_local! {
    static W_MEMO: RefCell<HashMap<(u32, u32), LieElement>> = RefCell::new(HashMap::new());
}

/// `w(X, Y)` on the standard generators `x1..xn`, `y1..ym`, with `n, m >= 1`.
fn w_standard(n: u32, m: u32) -> Result<LieElement> {
    if let Some(hit) = W_MEMO.with(|c| c.borrow().get(&(n, m)).cloned()) {
        return Ok(hit);
    }
    let left: Vec<Generator> = (1..=n).map(Generator::x).collect();
    let right: Vec<Generator> = (1..=m).map(Generator::y).collect();
    let mut sum = LieElement::zero();
    for variant in [Variant::WPrime, Variant::WDoublePrime] {
        for chain in enumerate_chains(n, m, variant)? {
            sum.add_scaled(&chain.evaluate(&left, &right), &chain.coefficient());
        }
    }
    let result = sum.scale(&q(1, (n + m) as i64));
    W_MEMO.with(|c| c.borrow_mut().insert((n, m), result.clone()));
    Ok(result)
}

/// `w(A, B)`: the coefficient of `t_A u_B` in the Campbell–Hausdorff series of
/// `Σ_{a∈A} t_a a` and `Σ_{b∈B} u_b b`. A single generator with the other side
/// empty is returned as is; both sides empty, or one side empty with two or
/// more generators on the other, is undefined.
pub fn w(a: &[Generator], b: &[Generator]) -> Result<LieElement> {
    match (a.len(), b.len()) {
        (1, 0) => return Ok(LieElement::generator(a[0])),
        (0, 1) => return Ok(LieElement::generator(b[0])),
        (na, nb) if na == 0 || nb == 0 => return Err(Error::WUndefined { a: na, b: nb }),
        _ => {}
    }
    let (n, m) = (a.len() as u32, b.len() as u32);
    let template = w_standard(n, m)?;
    let standard = a
        .iter()
        .enumerate()
        .all(|(i, g)| *g == Generator::x(i as u32 + 1))
        && b.iter()
            .enumerate()
            .all(|(j, g)| *g == Generator::y(j as u32 + 1));
    if standard {
        return Ok(template);
    }
    Ok(template.substitute(&|g: Generator| match g.side {
        Side::X => LieElement::generator(a[g.index as usize - 1]),
        Side::Y => LieElement::generator(b[g.index as usize - 1]),
    }))
}

/// Sum of `coefficient · chain` over one variant, before the `1/(n+m)`
/// prefactor.
pub fn chain_sum(n: u32, m: u32, variant: Variant) -> Result<LieElement> {
    let left: Vec<Generator> = (1..=n).map(Generator::x).collect();
    let right: Vec<Generator> = (1..=m).map(Generator::y).collect();
    let mut sum = LieElement::zero();
    for chain in enumerate_chains(n, m, variant)? {
        sum.add_scaled(&chain.evaluate(&left, &right), &chain.coefficient());
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie(s: &str) -> LieElement {
        s.parse().unwrap()
    }

    #[test]
    fn chains_for_single_pair() {
        let wp = enumerate_chains(1, 1, Variant::WPrime).unwrap();
        assert_eq!(wp.len(), 2);
        assert!(wp
            .iter()
            .any(|c| c.p == 1 && c.alphas[0].entries() == [1] && c.betas.is_empty()));
        assert!(wp.iter().any(|c| c.p == 2
            && c.alphas[0].entries() == [1]
            && c.betas[0].is_empty()
            && c.alphas[1].is_empty()));

        let wpp = enumerate_chains(1, 1, Variant::WDoublePrime).unwrap();
        assert_eq!(wpp.len(), 1);
        let c = &wpp[0];
        assert_eq!((c.p, c.pivot), (2, 1));
        assert!(c.alphas[0].is_empty());
        assert_eq!(c.betas[0].entries(), [1]);
    }

    #[test]
    fn chains_reject_empty_side() {
        assert!(enumerate_chains(1, 0, Variant::WPrime).is_err());
    }

    #[test]
    fn chains_cover_and_are_disjoint() {
        for (n, m) in [(2, 2), (3, 1), (1, 3)] {
            for variant in [Variant::WPrime, Variant::WDoublePrime] {
                let chains = enumerate_chains(n, m, variant).unwrap();
                for c in &chains {
                    let mut xs: Vec<u32> =
                        c.alphas.iter().flat_map(|a| a.entries().to_vec()).collect();
                    let mut ys: Vec<u32> =
                        c.betas.iter().flat_map(|b| b.entries().to_vec()).collect();
                    match variant {
                        Variant::WPrime => ys.push(c.pivot),
                        Variant::WDoublePrime => xs.push(c.pivot),
                    }
                    xs.sort_unstable();
                    ys.sort_unstable();
                    assert_eq!(xs, (1..=n).collect::<Vec<_>>());
                    assert_eq!(ys, (1..=m).collect::<Vec<_>>());
                    assert_eq!(c.betas.len(), c.p - 1);
                    for i in 0..c.p - 1 {
                        assert!(c.alphas[i].len() + c.betas[i].len() >= 1);
                    }
                }
                let mut keys: Vec<_> = chains
                    .iter()
                    .map(|c| {
                        let a: Vec<Vec<u32>> =
                            c.alphas.iter().map(|a| a.entries().to_vec()).collect();
                        let b: Vec<Vec<u32>> =
                            c.betas.iter().map(|b| b.entries().to_vec()).collect();
                        (c.p, a, b, c.pivot)
                    })
                    .collect();
                let before = keys.len();
                keys.sort();
                keys.dedup();
                assert_eq!(keys.len(), before, "duplicate chain for ({n},{m})");
            }
        }
    }

    #[test]
    fn degenerate_and_low_degree_values() {
        assert_eq!(w(&[Generator::x(1)], &[]).unwrap(), lie("x1"));
        assert_eq!(w(&[], &[Generator::y(3)]).unwrap(), lie("y3"));
        assert_eq!(
            w(&[Generator::x(1)], &[Generator::y(1)]).unwrap(),
            lie("1/2·[x1,y1]")
        );
        assert_eq!(
            w(&[Generator::x(1), Generator::x(2)], &[Generator::y(1)]).unwrap(),
            lie("1/12·[x1,[x2,y1]] + 1/12·[x2,[x1,y1]]")
        );
    }

    #[test]
    fn undefined_parts() {
        assert!(matches!(w(&[], &[]), Err(Error::WUndefined { a: 0, b: 0 })));
        assert!(matches!(
            w(&[], &[Generator::y(1), Generator::y(2)]),
            Err(Error::WUndefined { a: 0, b: 2 })
        ));
        assert!(w(&[Generator::x(1), Generator::x(2)], &[]).is_err());
    }

    #[test]
    fn relabeled_subsets() {
        let got = w(&[Generator::x(3)], &[Generator::y(2)]).unwrap();
        assert_eq!(got, lie("1/2·[x3,y2]"));
        // Arguments swapped across sides: w({y1},{x1}) = ½[y1,x1].
        let swapped = w(&[Generator::y(1)], &[Generator::x(1)]).unwrap();
        assert_eq!(swapped, lie("-1/2·[x1,y1]"));
    }

    #[test]
    fn homogeneous_and_multilinear() {
        let v = w_standard(2, 2).unwrap();
        assert_eq!(v.homogeneous_degree(), Some(4));
        for (word, _) in v.terms() {
            let mut letters = word.letters().to_vec();
            letters.sort();
            assert_eq!(
                letters,
                vec![
                    Generator::x(1),
                    Generator::x(2),
                    Generator::y(1),
                    Generator::y(2)
                ]
            );
        }
    }
}
