//! `pbw`: compute and verify PBW star-product components from the command
//! line.
//!
//! Exit codes: 0 success or PASS, 1 verification failure or DIFFER, 2 usage or
//! cap error.

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::json;

use pbw_core::assoc::{b_p_oracle, ch_log, lie_project, MultilinearTag, SymElement};
use pbw_core::bidiff::{lemma21_residual, Backend, Caps, CoeffTable};
use pbw_core::bipart::b_p_formula;
use pbw_core::chw::w;
use pbw_core::freelie::{Alphabet, Generator};
use pbw_core::specialize::{star_series, star_t, LieAlgebra, Polynomial};
use pbw_core::verify::{self, Report};

#[derive(Parser, Debug)]
#[command(
    name = "pbw",
    version,
    about = "Exact PBW star-product components on Lie algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Formula,
    Oracle,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Thm11,
    Dynkin,
    Lemma20,
    Lemma21,
    Thm22,
    Assoc,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// B_p(x1⋯xn, y1⋯ym) on the free Lie algebra.
    Bp {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        m: u32,
        #[arg(short)]
        p: usize,
        #[arg(long, value_enum, default_value_t = BackendArg::Formula)]
        backend: BackendArg,
        #[arg(long, default_value_t = 7)]
        max_total_degree: u32,
    },
    /// The multilinear Campbell–Hausdorff coefficient w(X, Y).
    W {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        m: u32,
        /// Compare against the truncated logarithm.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 7)]
        max_total_degree: u32,
    },
    /// Table of c_k(q) for k <= kmax, q <= qmax.
    Ck {
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 4)]
        qmax: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_total_degree: u32,
        #[arg(long, default_value_t = 6)]
        qmax: usize,
        #[arg(long, default_value_t = 6)]
        mmax: usize,
        /// Largest p + q for lemma20.
        #[arg(long, default_value_t = 3)]
        pq: usize,
        /// Largest p for thm22.
        #[arg(long, default_value_t = 2)]
        p: usize,
        /// Largest q for thm22: the test uses p + q generators, and q >= 1.
        #[arg(long, default_value_t = 2)]
        q: usize,
        /// Largest r for lemma20.
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Largest degree of the fixed argument for thm22.
        #[arg(long, default_value_t = 2)]
        dega: usize,
        #[arg(long, value_enum, default_value_t = BackendArg::Both)]
        backend: BackendArg,
        #[arg(long, default_value_t = 7)]
        cap: u32,
    },
    /// f ⋆_t g on a finite-dimensional Lie algebra.
    Star {
        /// First factor, e.g. "e1^2 e2".
        f: String,
        /// Second factor.
        g: String,
        /// Rational parameter; omit to print the series in t.
        #[arg(long)]
        t: Option<String>,
        /// Bundled algebra name (abelian2, heisenberg3, sl2) or a file path.
        #[arg(long, default_value = "heisenberg3")]
        algebra: String,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

impl From<pbw_core::Error> for Failure {
    fn from(e: pbw_core::Error) -> Self {
        usage(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::Bp {
            n,
            m,
            p,
            backend,
            max_total_degree,
        } => cmd_bp(n, m, p, backend, max_total_degree, format),
        Command::W {
            n,
            m,
            check,
            max_total_degree,
        } => cmd_w(n, m, check, max_total_degree, format),
        Command::Ck { kmax, qmax } => cmd_ck(kmax, qmax, format),
        Command::Verify {
            suite,
            max_total_degree,
            qmax,
            mmax,
            pq,
            p,
            q,
            r,
            dega,
            backend,
            cap,
        } => {
            let backends = match backend {
                BackendArg::Formula => vec![Backend::Formula],
                BackendArg::Oracle => vec![Backend::Oracle],
                BackendArg::Both => vec![Backend::Formula, Backend::Oracle],
            };
            let caps = Caps {
                max_total_degree: cap,
            };
            let check_cap =
                |total: u32| -> Result<(), Failure> { caps.check(total).map_err(Failure::from) };
            let reports: Vec<Report> = match suite {
                Suite::Thm11 => {
                    check_cap(max_total_degree)?;
                    vec![verify::thm11(max_total_degree)]
                }
                Suite::Dynkin => {
                    check_cap(max_total_degree)?;
                    vec![verify::dynkin(max_total_degree)?]
                }
                Suite::Lemma20 => vec![verify::lemma20(pq, r, &backends, caps)?],
                Suite::Lemma21 => vec![verify::lemma21(qmax, mmax)?],
                Suite::Thm22 => backends
                    .iter()
                    .map(|&b| verify::thm22(p, q, dega, b, caps))
                    .collect::<Result<_, _>>()?,
                Suite::Assoc => {
                    check_cap(max_total_degree)?;
                    vec![verify::assoc(max_total_degree as usize)]
                }
            };
            print_reports(&reports, format);
            Ok(if reports.iter().all(Report::passed) {
                0
            } else {
                1
            })
        }
        Command::Star { f, g, t, algebra } => cmd_star(&f, &g, t.as_deref(), &algebra, format),
    }
}

fn cmd_bp(n: u32, m: u32, p: usize, backend: BackendArg, cap: u32, format: Format) -> CmdResult {
    if n == 0 || m == 0 {
        return Err(usage("n and m must be at least 1"));
    }
    if n + m > cap {
        return Err(usage(format!("n + m = {} exceeds the cap {cap}", n + m)));
    }
    if p >= (n + m) as usize {
        return Err(usage(format!(
            "p out of range: need 0 <= p <= {}",
            n + m - 1
        )));
    }
    let formula = || b_p_formula(n, m, p);
    let oracle = || {
        let x = SymElement::generators(&(1..=n).map(Generator::x).collect::<Vec<_>>());
        let y = SymElement::generators(&(1..=m).map(Generator::y).collect::<Vec<_>>());
        b_p_oracle(&x, &y, p)
    };
    match backend {
        BackendArg::Formula | BackendArg::Oracle => {
            let value = if backend == BackendArg::Formula {
                formula()
            } else {
                oracle()
            };
            match format {
                Format::Text => println!("{value}"),
                Format::Machine => println!("{}", json!({ "value": value.to_tree() })),
            }
            Ok(0)
        }
        BackendArg::Both => {
            let (a, b) = (formula(), oracle());
            let verdict = if a == b { "EQUAL" } else { "DIFFER" };
            match format {
                Format::Text => {
                    println!("formula: {a}");
                    println!("oracle: {b}");
                    println!("VERDICT {verdict}");
                }
                Format::Machine => println!(
                    "{}",
                    json!({ "formula": a.to_tree(), "oracle": b.to_tree(), "verdict": verdict })
                ),
            }
            Ok(if a == b { 0 } else { 1 })
        }
    }
}

fn cmd_w(n: u32, m: u32, check: bool, cap: u32, format: Format) -> CmdResult {
    if n + m > cap {
        return Err(usage(format!("n + m = {} exceeds the cap {cap}", n + m)));
    }
    let xs: Vec<Generator> = (1..=n).map(Generator::x).collect();
    let ys: Vec<Generator> = (1..=m).map(Generator::y).collect();
    let value = w(&xs, &ys)?;
    let value_sym = SymElement::from_lie(&value);
    if !check {
        match format {
            Format::Text => println!("{value}"),
            Format::Machine => println!("{}", json!({ "value": value_sym.to_tree() })),
        }
        return Ok(0);
    }
    let alphabet = Alphabet::new(n, m);
    let z = ch_log(alphabet, n + m)?;
    let oracle = lie_project(&z.coefficient(&MultilinearTag::full(alphabet)))?;
    let equal = oracle == value;
    let verdict = if equal { "EQUAL" } else { "DIFFER" };
    match format {
        Format::Text => {
            println!("{value}");
            if !equal {
                println!("oracle: {oracle}");
            }
            println!("VERDICT {verdict}");
        }
        Format::Machine => println!(
            "{}",
            json!({
                "value": value_sym.to_tree(),
                "oracle": SymElement::from_lie(&oracle).to_tree(),
                "verdict": verdict,
            })
        ),
    }
    Ok(if equal { 0 } else { 1 })
}

fn cmd_ck(kmax: usize, qmax: usize, format: Format) -> CmdResult {
    let mut table = CoeffTable::new();
    let rows: Vec<Vec<String>> = (0..=kmax)
        .map(|k| (0..=qmax).map(|q| table.c(k, q).to_string()).collect())
        .collect();
    let mut lemma21_ok = true;
    for q in 1..=qmax.max(1) {
        for m in 0..=kmax {
            lemma21_ok &= lemma21_residual(&mut table, q, m)?.is_zero();
        }
    }
    let verdict = if lemma21_ok { "PASS" } else { "FAIL" };
    match format {
        Format::Text => {
            let header: Vec<String> = (0..=qmax).map(|q| format!("q={q}")).collect();
            println!("k\\q\t{}", header.join("\t"));
            for (k, row) in rows.iter().enumerate() {
                println!("k={k}\t{}", row.join("\t"));
            }
            println!("lemma21 {verdict}");
        }
        Format::Machine => println!("{}", json!({ "c": rows, "lemma21": verdict })),
    }
    Ok(if lemma21_ok { 0 } else { 1 })
}

fn print_reports(reports: &[Report], format: Format) {
    match format {
        Format::Text => {
            for r in reports {
                println!("{r}");
            }
        }
        Format::Machine => {
            let value: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite,
                        "pass": r.passed(),
                        "instances": r.instances.iter().map(|i| json!({
                            "key": i.key, "pass": i.pass, "residual": i.detail,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!("{}", json!(value));
        }
    }
}

fn load_algebra(name: &str) -> Result<LieAlgebra, Failure> {
    if LieAlgebra::bundled_names().any(|n| n == name) {
        return Ok(LieAlgebra::bundled(name)?);
    }
    let path = Path::new(name);
    if path.exists() {
        return Ok(LieAlgebra::load(path)?);
    }
    Err(usage(format!(
        "unknown algebra `{name}` (bundled: {})",
        LieAlgebra::bundled_names().collect::<Vec<_>>().join(", ")
    )))
}

fn cmd_star(f: &str, g: &str, t: Option<&str>, algebra: &str, format: Format) -> CmdResult {
    let alg = load_algebra(algebra)?;
    let names = alg.names();
    let f = Polynomial::parse(f, names)?;
    let g = Polynomial::parse(g, names)?;
    match t {
        Some(t) => {
            let t = pbw_core::rational::parse(t)?;
            let value = star_t(&f, &g, &t, &alg);
            match format {
                Format::Text => println!("{}", value.render(names)),
                Format::Machine => {
                    println!("{}", json!({ "basis": names, "value": value.to_tree() }))
                }
            }
        }
        None => {
            let series = star_series(&f, &g, &alg);
            match format {
                Format::Text => {
                    for (p, term) in series.iter().enumerate() {
                        println!("t^{p}: {}", term.render(names));
                    }
                }
                Format::Machine => println!(
                    "{}",
                    json!({
                        "basis": names,
                        "series": series.iter().map(Polynomial::to_tree).collect::<Vec<_>>(),
                    })
                ),
            }
        }
    }
    Ok(0)
}
