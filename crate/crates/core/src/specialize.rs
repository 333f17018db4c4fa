//! `B_p` and `⋆_t` on a finite-dimensional Lie algebra given by structure
//! constants.
//!
//! A monomial `e_{i_1}⋯e_{i_n}` is fed to the free formula as distinct
//! generators `x_1..x_n` all assigned to their basis letters; each Lie factor
//! of the result is then evaluated through the structure constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::assoc::SymElement;
use crate::bipart::b_p_formula;
use crate::freelie::{Generator, LieElement, LyndonWord, Side};
use crate::rational::{self, Q};
use crate::{Error, Result};

/// `[e_i, e_j] = Σ_k c_{ij}^k e_k`, indices 0-based internally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub dim: usize,
    pub names: Vec<String>,
    pub c: BTreeMap<(usize, usize, usize), Q>,
}

impl StructureConstants {
    pub fn abelian(dim: usize) -> Self {
        StructureConstants {
            dim,
            names: (1..=dim).map(|i| format!("e{i}")).collect(),
            c: BTreeMap::new(),
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Q {
        self.c.get(&(i, j, k)).cloned().unwrap_or_else(Q::zero)
    }

    /// Parses `dim N`, `basis n_1 … n_N`, then `i j k p/q` lines (1-based).
    /// Entries given only for `i < j` are completed antisymmetrically; `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let dim: usize = match lines
            .next()
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
        {
            Some(v) if v.len() == 2 && v[0] == "dim" => v[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad dimension `{}`", v[1])))?,
            _ => return Err(Error::Parse("expected `dim N` header".into())),
        };
        let names: Vec<String> = match lines
            .next()
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
        {
            Some(v) if v.first() == Some(&"basis") => {
                v[1..].iter().map(|s| s.to_string()).collect()
            }
            _ => return Err(Error::Parse("expected `basis` line".into())),
        };
        if names.len() != dim {
            return Err(Error::Parse(format!(
                "{} basis names for dim {dim}",
                names.len()
            )));
        }
        let mut given = BTreeMap::new();
        for line in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 {
                return Err(Error::Parse(format!("expected `i j k p/q`, got `{line}`")));
            }
            let idx = |s: &str| -> Result<usize> {
                let v: usize = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index `{s}`")))?;
                if v == 0 || v > dim {
                    return Err(Error::Parse(format!("index {v} outside 1..={dim}")));
                }
                Ok(v - 1)
            };
            let key = (idx(f[0])?, idx(f[1])?, idx(f[2])?);
            let value = rational::parse(f[3])?;
            if !value.is_zero() {
                given.insert(key, value);
            }
        }
        let mut c = given.clone();
        for (&(i, j, k), v) in &given {
            if i != j && !given.contains_key(&(j, i, k)) {
                c.insert((j, i, k), -v.clone());
            }
        }
        Ok(StructureConstants { dim, names, c })
    }

    /// Antisymmetry then Jacobi, reporting the first violation (1-based).
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if !(self.get(i, j, k) + self.get(j, i, k)).is_zero() {
                        return Err(Error::Antisymmetry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        let mut s = Q::zero();
                        for l in 0..n {
                            s += self.get(i, j, l) * self.get(l, k, m)
                                + self.get(j, k, l) * self.get(l, i, m)
                                + self.get(k, i, l) * self.get(l, j, m);
                        }
                        if !s.is_zero() {
                            return Err(Error::Jacobi {
                                i: i + 1,
                                j: j + 1,
                                k: k + 1,
                                m: m + 1,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Validated structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    sc: StructureConstants,
}

const BUNDLED: [(&str, &str); 3] = [
    ("abelian2", include_str!("../algebras/abelian2.txt")),
    ("heisenberg3", include_str!("../algebras/heisenberg3.txt")),
    ("sl2", include_str!("../algebras/sl2.txt")),
];

impl LieAlgebra {
    pub fn new(sc: StructureConstants) -> Result<Self> {
        sc.validate()?;
        Ok(LieAlgebra { sc })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(StructureConstants::parse(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn bundled_names() -> impl Iterator<Item = &'static str> {
        BUNDLED.iter().map(|(n, _)| *n)
    }

    pub fn bundled(name: &str) -> Result<Self> {
        let (_, text) = BUNDLED
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::InvalidArgument(format!("no bundled algebra `{name}`")))?;
        Self::parse(text)
    }

    pub fn heisenberg() -> Self {
        Self::bundled("heisenberg3").expect("bundled file is valid")
    }

    pub fn sl2() -> Self {
        Self::bundled("sl2").expect("bundled file is valid")
    }

    pub fn dim(&self) -> usize {
        self.sc.dim
    }

    pub fn names(&self) -> &[String] {
        &self.sc.names
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.sc.names.iter().position(|n| n == name)
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (&(i, j, k), c) in &self.sc.c {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            out[k] += &u[i] * &v[j] * c;
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }
}

/// An element of `S(g)` as a polynomial in the basis `e_1..e_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(vec![0; dim])
    }

    pub fn monomial(exponents: Vec<u32>) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, Q::one());
        p
    }

    pub fn variable(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self::monomial(e)
    }

    pub fn linear(v: &[Q]) -> Self {
        let mut p = Self::zero(v.len());
        for (i, c) in v.iter().enumerate() {
            let mut e = vec![0; v.len()];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        assert_eq!(exps.len(), self.dim);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (e, d) in &other.terms {
            self.add_term(e.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c * d);
            }
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c * Q::from_integer(e[i].into()));
        }
        out
    }

    /// Text form with basis names: `e1 e2 + 1/2 e3`, powers as `e1^2`.
    /// Terms run in graded-lex order, highest degree first.
    pub fn render(&self, names: &[String]) -> String {
        struct Show<'a>(&'a Polynomial, &'a [String]);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut terms: Vec<_> = self.0.terms.iter().collect();
                terms.sort_by(|(a, _), (b, _)| {
                    let deg = |e: &Vec<u32>| e.iter().sum::<u32>();
                    deg(b).cmp(&deg(a)).then_with(|| b.cmp(a))
                });
                rational::write_terms(
                    f,
                    " ",
                    terms
                        .into_iter()
                        .map(|(e, c)| (c, render_monomial(e, self.1))),
                )
            }
        }
        Show(self, names).to_string()
    }

    /// Inverse of [`Polynomial::render`].
    pub fn parse(text: &str, names: &[String]) -> Result<Polynomial> {
        let mut out = Polynomial::zero(names.len());
        for (c, body) in rational::split_terms(text, " ")? {
            out.add_term(parse_monomial(&body, names)?, c);
        }
        Ok(out)
    }

    pub fn to_tree(&self) -> PolyTree {
        PolyTree {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| PolyTerm {
                    coeff: rational::render(c),
                    exponents: e.clone(),
                })
                .collect(),
        }
    }

    pub fn from_tree(tree: &PolyTree, dim: usize) -> Result<Polynomial> {
        let mut out = Polynomial::zero(dim);
        for t in &tree.terms {
            if t.exponents.len() != dim {
                return Err(Error::Parse("exponent vector has wrong length".into()));
            }
            out.add_term(t.exponents.clone(), rational::parse(&t.coeff)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTree {
    pub terms: Vec<PolyTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

fn render_monomial(e: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                names[i].clone()
            } else {
                format!("{}^{k}", names[i])
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Whitespace-separated basis names with optional `^k` powers; `1` or the
/// empty string is the unit.
pub fn parse_monomial(text: &str, names: &[String]) -> Result<Vec<u32>> {
    let mut e = vec![0u32; names.len()];
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, power) = match tok.split_once('^') {
            Some((n, k)) => (
                n,
                k.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad power in `{tok}`")))?,
            ),
            None => (tok, 1),
        };
        let i = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown basis element `{name}`")))?;
        e[i] += power;
    }
    Ok(e)
}

fn eval_basis(
    w: &LyndonWord,
    assign: &dyn Fn(Generator) -> Option<usize>,
    alg: &LieAlgebra,
    memo: &mut HashMap<LyndonWord, Vec<Q>>,
) -> Result<Vec<Q>> {
    if let Some(v) = memo.get(w) {
        return Ok(v.clone());
    }
    let v = match w.standard_factorization() {
        None => {
            let g = w.letters()[0];
            let i = assign(g).ok_or(Error::Unassigned(g))?;
            alg.basis_vector(i)
        }
        Some((u, v)) => {
            let a = eval_basis(&u, assign, alg, memo)?;
            let b = eval_basis(&v, assign, alg, memo)?;
            alg.bracket(&a, &b)
        }
    };
    memo.insert(w.clone(), v.clone());
    Ok(v)
}

/// Image of a free Lie element under `generator ↦ e_{assign(generator)}`.
pub fn eval_lie(
    el: &LieElement,
    assign: &dyn Fn(Generator) -> Option<usize>,
    alg: &LieAlgebra,
) -> Result<Vec<Q>> {
    let mut memo = HashMap::new();
    let mut out = vec![Q::zero(); alg.dim()];
    for (w, c) in el.terms() {
        let v = eval_basis(w, assign, alg, &mut memo)?;
        for (o, x) in out.iter_mut().zip(v) {
            *o += x * c;
        }
    }
    Ok(out)
}

/// Image of an element of `S` of the free Lie algebra in `S(g)`.
pub fn eval_sym(
    s: &SymElement,
    assign: &dyn Fn(Generator) -> Option<usize>,
    alg: &LieAlgebra,
) -> Result<Polynomial> {
    let mut memo = HashMap::new();
    let mut out = Polynomial::zero(alg.dim());
    for (m, c) in s.terms() {
        let mut prod = Polynomial::one(alg.dim());
        for factor in m.factors() {
            let v = eval_basis(factor, assign, alg, &mut memo)?;
            prod = prod.mul(&Polynomial::linear(&v));
            if prod.is_zero() {
                break;
            }
        }
        out.add_scaled(&prod, c);
    }
    Ok(out)
}

fn letters(exps: &[u32]) -> Vec<usize> {
    exps.iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
        .collect()
}

/// Assignment labelling each occurrence of a basis letter in `f` as its own
/// `x_i` and each occurrence in `g` as its own `y_j`.
pub fn occurrence_assignment(f: &[u32], g: &[u32]) -> impl Fn(Generator) -> Option<usize> {
    let lf = letters(f);
    let lg = letters(g);
    move |gen: Generator| match gen.side {
        Side::X => lf.get(gen.index as usize - 1).copied(),
        Side::Y => lg.get(gen.index as usize - 1).copied(),
    }
}

/// `B_p(e^f, e^g)` for monomials given by exponent vectors.
pub fn bp_concrete(f: &[u32], g: &[u32], p: usize, alg: &LieAlgebra) -> Polynomial {
    let n: u32 = f.iter().sum();
    let m: u32 = g.iter().sum();
    let template = b_p_formula(n, m, p);
    eval_sym(&template, &occurrence_assignment(f, g), alg).expect("every occurrence is assigned")
}

/// Coefficients of `f ⋆_t g` in powers of `t`: entry `p` is `B_p(f, g)`.
pub fn star_series(f: &Polynomial, g: &Polynomial, alg: &LieAlgebra) -> Vec<Polynomial> {
    let max_p = (f.degree().unwrap_or(0) + g.degree().unwrap_or(0)) as usize;
    let mut out = vec![Polynomial::zero(alg.dim()); max_p + 1];
    for (a, c) in f.terms() {
        for (b, d) in g.terms() {
            let deg: u32 = a.iter().sum::<u32>() + b.iter().sum::<u32>();
            for (p, slot) in out.iter_mut().enumerate().take(deg as usize + 1) {
                slot.add_scaled(&bp_concrete(a, b, p, alg), &(c * d));
            }
        }
    }
    while out.len() > 1 && out.last().is_some_and(Polynomial::is_zero) {
        out.pop();
    }
    out
}

/// `f ⋆_t g = Σ_p B_p(f, g)·t^p` at a rational `t`.
pub fn star_t(f: &Polynomial, g: &Polynomial, t: &Q, alg: &LieAlgebra) -> Polynomial {
    let mut out = Polynomial::zero(alg.dim());
    let mut power = Q::one();
    for term in star_series(f, g, alg) {
        out.add_scaled(&term, &power);
        power *= t;
    }
    out
}

/// `{f, g} = Σ_{i,j} ∂_i f·∂_j g·[e_i, e_j]`.
pub fn poisson(f: &Polynomial, g: &Polynomial, alg: &LieAlgebra) -> Polynomial {
    let n = alg.dim();
    let mut out = Polynomial::zero(n);
    for i in 0..n {
        let fi = f.derivative(i);
        if fi.is_zero() {
            continue;
        }
        for j in 0..n {
            let br = alg.bracket(&alg.basis_vector(i), &alg.basis_vector(j));
            if br.iter().all(Zero::is_zero) {
                continue;
            }
            let gj = g.derivative(j);
            out.add_scaled(&fi.mul(&gj).mul(&Polynomial::linear(&br)), &Q::one());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn poly(alg: &LieAlgebra, s: &str) -> Polynomial {
        Polynomial::parse(s, alg.names()).unwrap()
    }

    fn mono(alg: &LieAlgebra, s: &str) -> Vec<u32> {
        parse_monomial(s, alg.names()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(StructureConstants::abelian(2).validate().is_ok());
        assert!(LieAlgebra::bundled("heisenberg3").is_ok());
        assert!(LieAlgebra::bundled("sl2").is_ok());
        let tampered = "dim 3\nbasis e1 e2 e3\n1 2 3 1\n2 1 3 1\n";
        let sc = StructureConstants::parse(tampered).unwrap();
        assert_eq!(sc.validate(), Err(Error::Antisymmetry { i: 1, j: 2, k: 3 }));
        // [e1,e2]=e2, [e2,e3]=e1, [e1,e3]=0 breaks Jacobi
        let bad = "dim 3\nbasis a b c\n1 2 2 1\n2 3 1 1\n";
        assert!(matches!(LieAlgebra::parse(bad), Err(Error::Jacobi { .. })));
        assert!(LieAlgebra::bundled("nope").is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(StructureConstants::parse("basis e1\n").is_err());
        assert!(StructureConstants::parse("dim 2\nbasis e1\n").is_err());
        assert!(StructureConstants::parse("dim 2\nbasis a b\n1 3 1 1\n").is_err());
        assert!(StructureConstants::parse("dim 2\nbasis a b\n1 2 1\n").is_err());
    }

    #[test]
    fn eval_lie_substitution() {
        let h = LieAlgebra::heisenberg();
        let assign = |g: Generator| match g {
            g if g == Generator::x(1) || g == Generator::x(2) => Some(0),
            g if g == Generator::y(1) => Some(1),
            _ => None,
        };
        let xy: LieElement = "[x1,y1]".parse().unwrap();
        assert_eq!(eval_lie(&xy, &assign, &h).unwrap(), h.basis_vector(2));
        let ab = LieAlgebra::bundled("abelian2").unwrap();
        assert!(eval_lie(&xy, &assign, &ab)
            .unwrap()
            .iter()
            .all(Zero::is_zero));
        let deep: LieElement = "[x1,[x2,y1]]".parse().unwrap();
        assert!(eval_lie(&deep, &assign, &h)
            .unwrap()
            .iter()
            .all(Zero::is_zero));
        let stray: LieElement = "[x3,y1]".parse().unwrap();
        assert!(matches!(
            eval_lie(&stray, &assign, &h),
            Err(Error::Unassigned(_))
        ));
    }

    #[test]
    fn concrete_b_p() {
        let h = LieAlgebra::heisenberg();
        let got = bp_concrete(&mono(&h, "e1"), &mono(&h, "e2"), 1, &h);
        assert_eq!(got, poly(&h, "1/2 e3"));
        assert!(bp_concrete(&mono(&h, "e1^2"), &mono(&h, "e2"), 2, &h).is_zero());
        let ab = LieAlgebra::bundled("abelian2").unwrap();
        for p in 1..4 {
            assert!(bp_concrete(&[2, 0], &[0, 1], p, &ab).is_zero());
        }
    }

    #[test]
    fn star_product_values() {
        let h = LieAlgebra::heisenberg();
        let (e1, e2) = (poly(&h, "e1"), poly(&h, "e2"));
        assert_eq!(star_t(&e1, &e2, &Q::zero(), &h), poly(&h, "e1 e2"));
        let series = star_series(&e1, &e2, &h);
        assert_eq!(series, vec![poly(&h, "e1 e2"), poly(&h, "1/2 e3")]);
        assert_eq!(star_t(&e1, &e2, &q(1, 3), &h), poly(&h, "e1 e2 + 1/6 e3"));

        let s = LieAlgebra::sl2();
        let (hh, e) = (poly(&s, "h"), poly(&s, "e"));
        let comm = star_t(&hh, &e, &Q::one(), &s).sub(&star_t(&e, &hh, &Q::one(), &s));
        assert_eq!(comm, poly(&s, "2 e"));
    }

    #[test]
    fn poisson_values() {
        let h = LieAlgebra::heisenberg();
        assert_eq!(
            poisson(&poly(&h, "e1"), &poly(&h, "e2"), &h),
            poly(&h, "e3")
        );
        assert_eq!(
            poisson(&poly(&h, "e1^2"), &poly(&h, "e2"), &h),
            poly(&h, "2 e1 e3")
        );
    }

    #[test]
    fn polynomial_text_round_trip() {
        let s = LieAlgebra::sl2();
        let p = poly(&s, "h^2 e - 3/4 f + 2");
        let back = Polynomial::parse(&p.render(s.names()), s.names()).unwrap();
        assert_eq!(back, p);
        assert_eq!(Polynomial::from_tree(&p.to_tree(), 3).unwrap(), p);
    }
}
