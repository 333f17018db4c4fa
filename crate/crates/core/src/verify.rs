//! Named verification suites. Each returns one [`Instance`] per checked case,
//! sorted by instance key, with the residual that must vanish.

use std::fmt;

use num_traits::Zero;

use crate::assoc::{
    b_oracle, b_p_oracle, ch_log, lie_project, MultilinearTag, SymElement, SymMonomial,
};
use crate::bidiff::{
    lemma20_residual, lemma21_residual, Backend, BpOperator, Caps, CoeffTable, Slot,
};
use crate::bipart::b_p_formula;
use crate::chw::w;
use crate::freelie::{Alphabet, Generator};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub key: String,
    pub pass: bool,
    /// Rendered residual (or the two differing values).
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub instances: Vec<Instance>,
}

impl Report {
    fn new(suite: &str, mut instances: Vec<Instance>) -> Self {
        instances.sort_by(|a, b| a.key.cmp(&b.key));
        Report {
            suite: suite.to_string(),
            instances,
        }
    }

    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.instances {
            let status = if i.pass { "PASS" } else { "FAIL" };
            write!(f, "{status} {} {}", self.suite, i.key)?;
            if !i.pass {
                write!(f, " residual: {}", i.detail)?;
            }
            writeln!(f)?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} ({} instances)",
            self.suite,
            self.instances.len()
        )
    }
}

fn zero_instance(key: String, residual: &SymElement) -> Instance {
    Instance {
        key,
        pass: residual.is_zero(),
        detail: residual.to_string(),
    }
}

fn xs(n: u32) -> Vec<Generator> {
    (1..=n).map(Generator::x).collect()
}

fn ys(m: u32) -> Vec<Generator> {
    (1..=m).map(Generator::y).collect()
}

/// Bipartition formula against straightening, for `n, m >= 1`,
/// `n + m <= max_total_degree`, `0 <= p < n + m`.
pub fn thm11(max_total_degree: u32) -> Report {
    let mut out = Vec::new();
    for n in 1..max_total_degree {
        for m in 1..=(max_total_degree - n) {
            let x = SymElement::generators(&xs(n));
            let y = SymElement::generators(&ys(m));
            for p in 0..(n + m) as usize {
                let formula = b_p_formula(n, m, p);
                let oracle = b_p_oracle(&x, &y, p);
                let residual = &formula - &oracle;
                out.push(zero_instance(format!("n={n} m={m} p={p}"), &residual));
            }
        }
    }
    Report::new("thm11", out)
}

/// `w(X, Y)` against the Lie projection of the truncated CH coefficient.
pub fn dynkin(max_total_degree: u32) -> Result<Report> {
    let mut out = Vec::new();
    for n in 1..max_total_degree {
        for m in 1..=(max_total_degree - n) {
            let alphabet = Alphabet::new(n, m);
            let z = ch_log(alphabet, n + m)?;
            let oracle = lie_project(&z.coefficient(&MultilinearTag::full(alphabet)))?;
            let formula = w(&xs(n), &ys(m))?;
            let residual = SymElement::from_lie(&(formula - oracle));
            out.push(zero_instance(format!("n={n} m={m}"), &residual));
        }
    }
    Ok(Report::new("dynkin", out))
}

pub fn lemma21(qmax: usize, mmax: usize) -> Result<Report> {
    let mut table = CoeffTable::new();
    let mut out = Vec::new();
    for q in 1..=qmax {
        for m in 0..=mmax {
            let r = lemma21_residual(&mut table, q, m)?;
            out.push(Instance {
                key: format!("q={q} m={m}"),
                pass: r.is_zero(),
                detail: r.to_string(),
            });
        }
    }
    Ok(Report::new("lemma21", out))
}

/// Reduction identity for `p >= 1`, `p + q <= max_pq`, `1 <= r <= max_r`,
/// in both argument orders and with each listed backend.
pub fn lemma20(max_pq: usize, max_r: usize, backends: &[Backend], caps: Caps) -> Result<Report> {
    let mut table = CoeffTable::new();
    let mut out = Vec::new();
    for p in 1..=max_pq {
        for q in 0..=(max_pq - p) {
            for r in 1..=max_r {
                for &backend in backends {
                    for swapped in [false, true] {
                        let res = lemma20_residual(&mut table, p, q, r, backend, swapped, caps)?;
                        let order = if swapped { "yx" } else { "xy" };
                        out.push(zero_instance(
                            format!("p={p} q={q} r={r} {order} {}", backend_name(backend)),
                            &res,
                        ));
                    }
                }
            }
        }
    }
    Ok(Report::new("lemma20", out))
}

pub fn backend_name(b: Backend) -> &'static str {
    match b {
        Backend::Formula => "formula",
        Backend::Oracle => "oracle",
    }
}

/// Order-`p` test for `B_p(a, ·)` and `B_p(·, a)` with `a = y_1⋯y_r`,
/// `r <= max_deg_a`, `1 <= p <= max_p`, `1 <= q <= max_q`.
pub fn thm22(
    max_p: usize,
    max_q: usize,
    max_deg_a: usize,
    backend: Backend,
    caps: Caps,
) -> Result<Report> {
    let mut out = Vec::new();
    for r in 0..=max_deg_a {
        let a = SymMonomial::from_generators(&ys(r as u32));
        for p in 1..=max_p {
            for slot in [Slot::Left, Slot::Right] {
                let f = BpOperator::new(p, a.clone(), slot, backend);
                for q in 1..=max_q {
                    let res = f.residual(p, q, caps)?;
                    let name = match slot {
                        Slot::Left => "B_p(a,.)",
                        Slot::Right => "B_p(.,a)",
                    };
                    out.push(zero_instance(format!("{name} deg_a={r} p={p} q={q}"), &res));
                }
            }
        }
    }
    Ok(Report::new("thm22", out))
}

fn sym_gens(g: &[Generator]) -> SymElement {
    SymElement::generators(g)
}

/// Associativity and unitality of `B` on monomial triples up to
/// `max_total_degree`: one family with all letters distinct, one built from
/// powers of `x1` and `y1`.
pub fn assoc(max_total_degree: usize) -> Report {
    let mut out = Vec::new();
    let unit = SymElement::unit();
    for a in 1..=max_total_degree {
        for b in 1..=max_total_degree.saturating_sub(a) {
            for c in 1..=max_total_degree.saturating_sub(a + b) {
                let families = [
                    (
                        "distinct",
                        sym_gens(&xs(a as u32)),
                        sym_gens(&ys(b as u32)),
                        sym_gens(
                            &((a + 1) as u32..=(a + c) as u32)
                                .map(Generator::x)
                                .collect::<Vec<_>>(),
                        ),
                    ),
                    (
                        "powers",
                        sym_gens(&vec![Generator::x(1); a]),
                        sym_gens(&vec![Generator::y(1); b]),
                        sym_gens(&vec![Generator::x(1); c]),
                    ),
                ];
                for (family, f, g, h) in families {
                    let left = b_oracle(&b_oracle(&f, &g), &h);
                    let right = b_oracle(&f, &b_oracle(&g, &h));
                    out.push(zero_instance(
                        format!("{family} degrees={a},{b},{c}"),
                        &(&left - &right),
                    ));
                }
            }
        }
        let f = sym_gens(&xs(a as u32));
        let res_l = &b_oracle(&unit, &f) - &f;
        let res_r = &b_oracle(&f, &unit) - &f;
        out.push(zero_instance(
            format!("unit degree={a}"),
            &(&res_l + &res_r),
        ));
    }
    Report::new("assoc", out)
}
