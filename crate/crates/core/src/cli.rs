//! Command-line front end. Every subcommand wraps library operations and
//! prints either text or, with `--json`, a JSON document.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::bialg::{self, moebius_elem, prim_dim};
use crate::colored::{self, colored_prim_dim, ColorSet};
use crate::error::{Error, Result};
use crate::intrel::{self, xi, IntRel};
use crate::linalg::LinComb;
use crate::order::{self, tamari, weak_bruhat_poset};
use crate::report::Report;
use crate::trees::{enumerate, Tree};

#[derive(Parser, Debug)]
#[command(name = "magbialg", version, about = "Möbius bases of magmatic bialgebras on trees, colored trees and integer relations")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    Quick,
    Full,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderKind {
    Tamari,
    Bruhat,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the trees with N leaves.
    EnumTrees { n: usize },
    /// Hasse diagram of Tamari(N) or weak Bruhat(N), as DOT (or JSON).
    Hasse {
        n: usize,
        #[arg(long, value_enum, default_value = "tamari")]
        order: OrderKind,
    },
    /// The matrix μ(x, y) on Tamari(N).
    MoebiusMatrix { n: usize },
    /// The Möbius element M_t of a tree such as "(|(||))".
    Mtree { tree: String },
    /// Möbius routes and the coproduct formula for M_t.
    VerifyAs {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Dimensions of the primitive elements, optionally over K colors.
    PrimDims {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        colors: Option<usize>,
    },
    /// Colored structure and operator calculus.
    VerifyColored {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        colors: usize,
    },
    /// Lattice checks, the Tonks projection and the support of μ(−, 1_n).
    VerifyOrder {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Integer relation laws and the Ξ basis.
    IntrelVerify {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Random irreducibles of size 4 when max-n ≥ 4.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Full basis check in size 4.
        #[arg(long)]
        full_four: bool,
    },
    /// Ξ of a ⊔-irreducible relation given as {"n": .., "arcs": [[i, j], ..]}.
    Xi {
        #[arg(long)]
        rel: String,
    },
    /// Every suite at the sizes of a profile.
    VerifyAll {
        #[arg(long, value_enum, default_value = "quick")]
        profile: Profile,
    },
}

/// Parse `args` (program name first) and run; returns exit status and output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            (code, e.render().to_string())
        }
    }
}

/// Run a parsed command.
pub fn execute(cli: &Cli) -> (i32, String) {
    match dispatch(cli) {
        Ok((passed, out)) => (if passed { 0 } else { 1 }, out),
        Err(e) => {
            let msg = if cli.json { json!({ "error": e.to_string() }).to_string() } else { format!("error: {e}") };
            (2, msg + "\n")
        }
    }
}

fn coeff_json(c: &BigInt) -> Value {
    c.to_i64().map_or_else(|| Value::String(c.to_string()), Value::from)
}

fn tree_terms(x: &LinComb<Tree>) -> Vec<Value> {
    x.iter().map(|(t, c)| json!({ "tree": t.compact(), "dyck": t.dyck(), "coeff": coeff_json(c) })).collect()
}

fn rel_terms(x: &LinComb<IntRel>) -> Vec<Value> {
    x.iter().map(|(r, c)| json!({ "rel": r, "coeff": coeff_json(c) })).collect()
}

fn signed_sum<B: Ord + Clone>(x: &LinComb<B>, label: impl Fn(&B) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (b, c)) in x.iter().enumerate() {
        let neg = *c < BigInt::from(0);
        let mag = if neg { -c } else { c.clone() };
        let sign = match (k, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let coeff = if mag == BigInt::from(1) { String::new() } else { format!("{mag}·") };
        let _ = write!(s, "{sign}{coeff}{}", label(b));
    }
    s
}

fn reports_out(cli: &Cli, reports: Vec<Report>, extra: Value) -> (bool, String) {
    let passed = reports.iter().all(Report::passed);
    let out = if cli.json {
        let mut doc = json!({ "passed": passed, "reports": reports });
        if let (Value::Object(d), Value::Object(e)) = (&mut doc, extra) {
            d.extend(e);
        }
        format!("{doc:#}\n")
    } else {
        let mut s: String = reports.iter().map(ToString::to_string).collect();
        let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        let _ = writeln!(s, "{} of {total} checks passed", total - failed);
        s
    };
    (passed, out)
}

/// The suites run by `verify-all`.
pub fn profile_reports(profile: Profile) -> Vec<Report> {
    match profile {
        Profile::Quick => vec![
            bialg::moebius_routes(6),
            bialg::verify_as(6),
            bialg::coalgebra_laws(6),
            bialg::primitive_checks(6, 6),
            order::order_laws(6),
            colored::colored_structure(4, 2),
            colored::operator_calculus(4, 2, 4),
            intrel::relation_laws(3),
            intrel::xi_suite(3, 0, false),
            intrel::comb_operator_laws(),
        ],
        Profile::Full => vec![
            bialg::moebius_routes(8),
            bialg::verify_as(8),
            bialg::coalgebra_laws(7),
            bialg::primitive_checks(6, 8),
            order::order_laws(7),
            colored::colored_structure(5, 2),
            colored::operator_calculus(5, 2, 5),
            intrel::relation_laws(4),
            intrel::xi_suite(4, 100, false),
            intrel::comb_operator_laws(),
        ],
    }
}

fn dispatch(cli: &Cli) -> Result<(bool, String)> {
    match &cli.command {
        Command::EnumTrees { n } => {
            let ts = enumerate(*n)?;
            Ok((true, if cli.json {
                format!("{:#}\n", json!({ "n": n, "count": ts.len(), "trees": ts.iter().map(|t| json!({ "tree": t.compact(), "dyck": t.dyck() })).collect::<Vec<_>>() }))
            } else {
                ts.iter().map(|t| format!("{}\n", t.compact())).collect()
            }))
        }
        Command::Hasse { n, order } => {
            let out = match order {
                OrderKind::Tamari => {
                    let p = tamari(*n)?;
                    if cli.json { format!("{:#}\n", p.to_json(|t| json!(t.compact()))) } else { p.to_dot(Tree::compact) }
                }
                OrderKind::Bruhat => {
                    let p = weak_bruhat_poset(*n)?;
                    if cli.json { format!("{:#}\n", p.to_json(|s| json!(s.values()))) } else { p.to_dot(ToString::to_string) }
                }
            };
            Ok((true, out))
        }
        Command::MoebiusMatrix { n } => {
            let p = tamari(*n)?;
            let m: Vec<Vec<i64>> = (0..p.len()).map(|x| (0..p.len()).map(|y| p.mobius(x, y)).collect()).collect();
            let labels: Vec<String> = p.elements().iter().map(Tree::compact).collect();
            Ok((true, if cli.json {
                format!("{:#}\n", json!({ "n": n, "trees": labels, "matrix": m }))
            } else {
                let mut s = String::new();
                for (k, l) in labels.iter().enumerate() {
                    let _ = writeln!(s, "{k}: {l}");
                }
                for row in &m {
                    let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
                    let _ = writeln!(s, "{}", cells.join(""));
                }
                s
            }))
        }
        Command::Mtree { tree } => {
            let t: Tree = tree.parse()?;
            let m = moebius_elem(&t);
            Ok((true, if cli.json {
                format!("{:#}\n", json!({ "tree": t.compact(), "moebius": tree_terms(&m) }))
            } else {
                format!("M_{} = {}\n", t.compact(), signed_sum(&m, Tree::compact))
            }))
        }
        Command::VerifyAs { max_n } => {
            Ok(reports_out(cli, vec![bialg::moebius_routes(*max_n), bialg::verify_as(*max_n)], json!({})))
        }
        Command::PrimDims { max_n, colors } => {
            let dims: Vec<usize> = match colors {
                None => (1..=*max_n).map(prim_dim).collect::<Result<_>>()?,
                Some(k) => {
                    let set = ColorSet::new(*k)?;
                    (1..=*max_n).map(|n| colored_prim_dim(n, &set)).collect::<Result<_>>()?
                }
            };
            Ok((true, if cli.json {
                format!("{:#}\n", json!({ "max_n": max_n, "colors": colors, "dims": dims }))
            } else {
                let cells: Vec<String> = dims.iter().map(ToString::to_string).collect();
                format!("{}\n", cells.join(","))
            }))
        }
        Command::VerifyColored { max_n, colors } => Ok(reports_out(
            cli,
            vec![colored::colored_structure(*max_n, *colors), colored::operator_calculus(*max_n, *colors, *max_n)],
            json!({}),
        )),
        Command::VerifyOrder { max_n } => Ok(reports_out(cli, vec![order::order_laws(*max_n)], json!({}))),
        Command::IntrelVerify { max_n, samples, full_four } => Ok(reports_out(
            cli,
            vec![intrel::relation_laws(*max_n), intrel::xi_suite(*max_n, *samples, *full_four), intrel::comb_operator_laws()],
            json!({}),
        )),
        Command::Xi { rel } => {
            let r: IntRel = serde_json::from_str(rel).map_err(|e| Error::Parse(e.to_string()))?;
            let x = xi(&r)?;
            let prim = bialg::is_primitive(&x);
            Ok((true, if cli.json {
                format!("{:#}\n", json!({ "rel": r, "xi": rel_terms(&x), "primitive": prim }))
            } else {
                format!("Ξ({r}) = {}\nprimitive: {prim}\n", signed_sum(&x, ToString::to_string))
            }))
        }
        Command::VerifyAll { profile } => {
            let name = format!("{profile:?}").to_lowercase();
            Ok(reports_out(cli, profile_reports(*profile), json!({ "profile": name })))
        }
    }
}
