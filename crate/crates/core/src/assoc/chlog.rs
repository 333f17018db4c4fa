//! Multilinear Campbell–Hausdorff coefficients by a truncated logarithm.
//!
//! With `x(t) = Σ t_i x_i` and `y(u) = Σ u_j y_j`, every term of
//! `log(exp(x(t))·exp(y(u)))` carries a monomial in the formal variables. Only
//! square-free monomials `t_A u_B` are kept, so any product that would repeat
//! a variable is dropped on the spot and the series terminates after `n + m`
//! powers of `exp(x)exp(y) - 1`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{embed, AssocElement};
use crate::freelie::{ad_sequence, Alphabet, Generator, LieElement, Side};
use crate::rational::{factorial, q, Q};
use crate::{Error, Result};

/// The square-free monomial `t_A u_B`, stored as bitmasks over 1-based
/// indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultilinearTag {
    xs: u64,
    ys: u64,
}

impl MultilinearTag {
    pub fn new(xs: &[u32], ys: &[u32]) -> Self {
        let mask = |v: &[u32]| v.iter().fold(0u64, |acc, &i| acc | (1u64 << (i - 1)));
        MultilinearTag {
            xs: mask(xs),
            ys: mask(ys),
        }
    }

    pub fn full(alphabet: Alphabet) -> Self {
        let xs: Vec<u32> = (1..=alphabet.n).collect();
        let ys: Vec<u32> = (1..=alphabet.m).collect();
        Self::new(&xs, &ys)
    }

    fn of_generator(g: Generator) -> Self {
        match g.side {
            Side::X => MultilinearTag {
                xs: 1 << (g.index - 1),
                ys: 0,
            },
            Side::Y => MultilinearTag {
                xs: 0,
                ys: 1 << (g.index - 1),
            },
        }
    }

    pub fn xs(&self) -> Vec<u32> {
        bits(self.xs)
    }

    pub fn ys(&self) -> Vec<u32> {
        bits(self.ys)
    }

    pub fn size(&self) -> u32 {
        self.xs.count_ones() + self.ys.count_ones()
    }

    fn disjoint(&self, other: &Self) -> bool {
        self.xs & other.xs == 0 && self.ys & other.ys == 0
    }

    fn union(&self, other: &Self) -> Self {
        MultilinearTag {
            xs: self.xs | other.xs,
            ys: self.ys | other.ys,
        }
    }
}

fn bits(mask: u64) -> Vec<u32> {
    (0..64)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

/// Series in the formal variables, truncated to square-free tags.
#[derive(Clone, Debug, Default)]
struct TaggedSeries {
    terms: BTreeMap<(MultilinearTag, Vec<Generator>), Q>,
}

impl TaggedSeries {
    fn unit() -> Self {
        let mut s = Self::default();
        s.add((MultilinearTag::default(), Vec::new()), Q::one());
        s
    }

    fn linear(gens: &[Generator]) -> Self {
        let mut s = Self::default();
        for &g in gens {
            s.add((MultilinearTag::of_generator(g), vec![g]), Q::one());
        }
        s
    }

    fn add(&mut self, key: (MultilinearTag, Vec<Generator>), c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn add_scaled(&mut self, other: &TaggedSeries, c: &Q) {
        for (k, d) in &other.terms {
            self.add(k.clone(), d * c);
        }
    }

    fn mul(&self, other: &TaggedSeries) -> TaggedSeries {
        let mut out = TaggedSeries::default();
        for ((ta, wa), c) in &self.terms {
            for ((tb, wb), d) in &other.terms {
                if !ta.disjoint(tb) {
                    continue;
                }
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add((ta.union(tb), w), c * d);
            }
        }
        out
    }

    fn exp(&self, max_power: usize) -> TaggedSeries {
        let mut out = TaggedSeries::unit();
        let mut power = TaggedSeries::unit();
        for k in 1..=max_power {
            power = power.mul(self);
            if power.terms.is_empty() {
                break;
            }
            out.add_scaled(&power, &Q::new(1.into(), factorial(k)));
        }
        out
    }
}

/// Tag coefficients of `z = log(exp(x(t))·exp(y(u)))`.
#[derive(Clone, Debug, Default)]
pub struct ChLog {
    coefficients: BTreeMap<MultilinearTag, AssocElement>,
}

impl ChLog {
    /// The coefficient of `t_A u_B`; zero when the tag never occurs.
    pub fn coefficient(&self, tag: &MultilinearTag) -> AssocElement {
        self.coefficients.get(tag).cloned().unwrap_or_default()
    }

    pub fn tags(&self) -> impl Iterator<Item = &MultilinearTag> {
        self.coefficients.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultilinearTag, &AssocElement)> {
        self.coefficients.iter()
    }
}

/// Computes every square-free coefficient of the Campbell–Hausdorff series in
/// `x1..xn`, `y1..ym`. `degree_cap` bounds the logarithm's powers and must be
/// at least `n + m`.
pub fn ch_log(alphabet: Alphabet, degree_cap: u32) -> Result<ChLog> {
    let needed = alphabet.n + alphabet.m;
    if degree_cap < needed {
        return Err(Error::CapTooSmall {
            cap: degree_cap,
            needed,
        });
    }
    let ex = TaggedSeries::linear(&alphabet.xs()).exp(alphabet.n as usize);
    let ey = TaggedSeries::linear(&alphabet.ys()).exp(alphabet.m as usize);
    let mut d = ex.mul(&ey);
    d.add((MultilinearTag::default(), Vec::new()), -Q::one());

    let mut z = TaggedSeries::default();
    let mut power = TaggedSeries::unit();
    for k in 1..=degree_cap as usize {
        power = power.mul(&d);
        if power.terms.is_empty() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        z.add_scaled(&power, &q(sign, k as i64));
    }

    let mut coefficients: BTreeMap<MultilinearTag, AssocElement> = BTreeMap::new();
    for ((tag, word), c) in z.terms {
        let slot = coefficients.entry(tag).or_default();
        slot.add_scaled(&AssocElement::generator_word(&word), &c);
    }
    coefficients.retain(|_, v| !v.is_zero());
    Ok(ChLog { coefficients })
}

/// Recovers the Lie element whose embedding is `u`. Each generator word
/// `g_1⋯g_d` is sent to `(1/d)[g_1,[g_2,…,g_d]]`, which fixes Lie elements,
/// and the result is checked by embedding it back.
pub fn lie_project(u: &AssocElement) -> Result<LieElement> {
    let flat = u.flatten();
    let mut out = LieElement::zero();
    for (w, c) in flat.terms() {
        let gens: Vec<Generator> = w
            .letters()
            .iter()
            .map(|l| l.as_generator().expect("flattened"))
            .collect();
        let Some((&last, rest)) = gens.split_last() else {
            return Err(Error::NotPrimitive(format!("constant term {c} in {u}")));
        };
        let chain = ad_sequence(rest, &LieElement::generator(last));
        let weight = c / BigRational::from_integer(gens.len().into());
        out.add_scaled(&chain, &weight);
    }
    if embed(&out) != flat {
        return Err(Error::NotPrimitive(u.to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie(s: &str) -> LieElement {
        s.parse().unwrap()
    }

    #[test]
    fn low_order_coefficients() {
        let z = ch_log(Alphabet::new(2, 1), 3).unwrap();
        let x1 = z.coefficient(&MultilinearTag::new(&[1], &[]));
        assert_eq!(lie_project(&x1).unwrap(), lie("x1"));
        let xy = z.coefficient(&MultilinearTag::new(&[1], &[1]));
        assert_eq!(lie_project(&xy).unwrap(), lie("1/2·[x1,y1]"));
        let xxy = z.coefficient(&MultilinearTag::new(&[1, 2], &[1]));
        assert_eq!(
            lie_project(&xxy).unwrap(),
            lie("1/12·[x1,[x2,y1]] + 1/12·[x2,[x1,y1]]")
        );
        assert_eq!(xxy, embed(&lie("1/12·[x1,[x2,y1]] + 1/12·[x2,[x1,y1]]")));
    }

    #[test]
    fn only_x_tags_above_degree_one_vanish() {
        let z = ch_log(Alphabet::new(2, 1), 3).unwrap();
        assert!(z.coefficient(&MultilinearTag::new(&[1, 2], &[])).is_zero());
    }

    #[test]
    fn cap_below_alphabet_is_rejected() {
        assert!(matches!(
            ch_log(Alphabet::new(2, 2), 3),
            Err(Error::CapTooSmall { cap: 3, needed: 4 })
        ));
    }

    #[test]
    fn projection_rejects_non_primitive() {
        let w = AssocElement::generator_word(&[Generator::x(1), Generator::y(1)]);
        assert!(matches!(lie_project(&w), Err(Error::NotPrimitive(_))));
        assert!(lie_project(&AssocElement::unit()).is_err());
        let xy = embed(&lie("[x1,y1]"));
        assert_eq!(lie_project(&xy).unwrap(), lie("[x1,y1]"));
    }
}
