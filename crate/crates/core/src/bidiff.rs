//! Reduction identities for the `B_p` and the alternating-sum test for
//! differential operators on `S(g)`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::assoc::{b_p_oracle, SymElement, SymMonomial};
use crate::bipart::b_p_formula_sym;
use crate::freelie::Generator;
use crate::rational::{binomial, sign, Q};
use crate::{Error, Result};

/// Which computation of `B_p` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Special-bipartition sum.
    Formula,
    /// `e⁻¹(e·e)` by straightening.
    Oracle,
}

impl Backend {
    pub fn b_p(self, x: &SymElement, y: &SymElement, p: usize) -> SymElement {
        match self {
            Backend::Formula => b_p_formula_sym(x, y, p),
            Backend::Oracle => b_p_oracle(x, y, p),
        }
    }
}

/// Degree limits for the identity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_total_degree: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_total_degree: 7,
        }
    }
}

impl Caps {
    pub fn check(&self, total: u32) -> Result<()> {
        if total > self.max_total_degree {
            Err(Error::DegreeCap {
                requested: total,
                cap: self.max_total_degree,
            })
        } else {
            Ok(())
        }
    }
}

/// Memo of `c_k(q)`: `c_0(q) = 1`, `c_k(q) = 1 - Σ_{l<k} c_l(q)·C(q+k, k-l)`.
#[derive(Clone, Debug, Default)]
pub struct CoeffTable {
    memo: HashMap<(usize, usize), Q>,
}

impl CoeffTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn c(&mut self, k: usize, q: usize) -> Q {
        if k == 0 {
            return Q::one();
        }
        if let Some(v) = self.memo.get(&(k, q)) {
            return v.clone();
        }
        let mut value = Q::one();
        for l in 0..k {
            let b = binomial((q + k) as i64, (k - l) as i64);
            value -= self.c(l, q) * Q::from_integer(b);
        }
        self.memo.insert((k, q), value.clone());
        value
    }
}

/// `(-1)^m + Σ_{t=1}^{q} C(m+q, m+t)·(-1)^t·c_m(t)`; zero for every `q >= 1`.
pub fn lemma21_residual(table: &mut CoeffTable, q: usize, m: usize) -> Result<Q> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be at least 1".into()));
    }
    let mut total = sign(m);
    for t in 1..=q {
        let b = Q::from_integer(binomial((m + q) as i64, (m + t) as i64));
        total += b * sign(t) * table.c(m, t);
    }
    Ok(total)
}

/// `a_S`: the product of the listed elements over the index subset `S`
/// (given as a bitmask over positions); the empty product is 1.
pub fn subset_product(elems: &[SymElement], mask: u32) -> SymElement {
    let mut out = SymElement::unit();
    for (i, e) in elems.iter().enumerate() {
        if mask & (1 << i) != 0 {
            out = &out * e;
        }
    }
    out
}

/// Left side minus right side of
/// `B_p(x_1⋯x_{p+q}, y_1⋯y_r) = Σ_{k<r} c_k(q) Σ_{#S=q+k} x_S·B_p(x_{S^c}, y_1⋯y_r)`.
/// With `swapped` the `x`'s move to the second argument of every `B_p`.
pub fn lemma20_residual(
    table: &mut CoeffTable,
    p: usize,
    q: usize,
    r: usize,
    backend: Backend,
    swapped: bool,
    caps: Caps,
) -> Result<SymElement> {
    if p == 0 || r == 0 {
        return Err(Error::InvalidArgument(
            "the reduction identity needs p >= 1 and r >= 1".into(),
        ));
    }
    let nx = p + q;
    caps.check((nx + r) as u32)?;
    let xs: Vec<SymElement> = (1..=nx as u32)
        .map(|i| SymElement::generators(&[Generator::x(i)]))
        .collect();
    let ys: Vec<Generator> = (1..=r as u32).map(Generator::y).collect();
    let y = SymElement::generators(&ys);
    let apply = |xpart: &SymElement| {
        if swapped {
            backend.b_p(&y, xpart, p)
        } else {
            backend.b_p(xpart, &y, p)
        }
    };

    let full = (1u32 << nx) - 1;
    let mut residual = apply(&subset_product(&xs, full));
    for k in 0..r {
        let c = table.c(k, q);
        if c.is_zero() {
            continue;
        }
        for s in 0..=full {
            if s.count_ones() as usize != q + k {
                continue;
            }
            let term = &subset_product(&xs, s) * &apply(&subset_product(&xs, full & !s));
            residual.add_scaled(&term, &-c.clone());
        }
    }
    Ok(residual)
}

/// `Σ_{S⊆{1..p+q}} (-1)^{#S} x_{S^c}·F(x_S)`. `F` is a differential operator
/// of order at most `p` exactly when this vanishes for every `q >= 1` and all
/// choices of generators; at `q = 0` it is the order `p - 1` test evaluated
/// at 1.
pub fn diff_op_residual<F>(f: F, p: usize, q: usize, gens: &[SymElement]) -> Result<SymElement>
where
    F: Fn(&SymElement) -> SymElement,
{
    if gens.len() != p + q {
        return Err(Error::InvalidArgument(format!(
            "expected p + q = {} generators, got {}",
            p + q,
            gens.len()
        )));
    }
    let full = if gens.is_empty() {
        0
    } else {
        (1u32 << gens.len()) - 1
    };
    let mut out = SymElement::zero();
    for s in 0..=full {
        let image = f(&subset_product(gens, s));
        let term = &subset_product(gens, full & !s) * &image;
        out.add_scaled(&term, &sign(s.count_ones() as usize));
    }
    Ok(out)
}

/// The general form `Σ_{S⊆{0..p}} (-1)^{#S} a_{S^c}·F(a_S·b)` on arbitrary
/// elements. With `p + 1` elements in `a` it vanishes identically iff `F` has
/// order at most `p`.
pub fn diff_op_residual_general<F>(f: F, a: &[SymElement], b: &SymElement) -> SymElement
where
    F: Fn(&SymElement) -> SymElement,
{
    let full = if a.is_empty() {
        0
    } else {
        (1u32 << a.len()) - 1
    };
    let mut out = SymElement::zero();
    for s in 0..=full {
        let image = f(&(&subset_product(a, s) * b));
        let term = &subset_product(a, full & !s) * &image;
        out.add_scaled(&term, &sign(s.count_ones() as usize));
    }
    out
}

/// Which argument of `B_p` is held fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    /// `F = B_p(a, ·)`.
    Left,
    /// `F = B_p(·, a)`.
    Right,
}

/// `B_p(a, ·)` or `B_p(·, a)` as an operator on `S(g)`.
#[derive(Clone, Debug)]
pub struct BpOperator {
    pub p: usize,
    pub a: SymElement,
    pub slot: Slot,
    pub backend: Backend,
}

impl BpOperator {
    pub fn new(p: usize, a: SymMonomial, slot: Slot, backend: Backend) -> Self {
        BpOperator {
            p,
            a: SymElement::monomial(a),
            slot,
            backend,
        }
    }

    pub fn apply(&self, x: &SymElement) -> SymElement {
        match self.slot {
            Slot::Left => self.backend.b_p(&self.a, x, self.p),
            Slot::Right => self.backend.b_p(x, &self.a, self.p),
        }
    }

    /// The order-`order` test on `x_1..x_{order+q}`. `a` is expected to be
    /// built from `y` generators so the two sides never share letters.
    pub fn residual(&self, order: usize, q: usize, caps: Caps) -> Result<SymElement> {
        let a_deg = self.a.max_degree().unwrap_or(0);
        caps.check((a_deg + order + q) as u32)?;
        let gens: Vec<SymElement> = (1..=(order + q) as u32)
            .map(|i| SymElement::generators(&[Generator::x(i)]))
            .collect();
        diff_op_residual(|x| self.apply(x), order, q, &gens)
    }
}
