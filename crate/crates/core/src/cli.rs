//! Command-line front end. [`run`] parses arguments, validates every flag,
//! runs one subcommand and writes its report.
//!
//! Exit codes: 0 on success, 1 when a computation fails (or `selftest` has a
//! failing criterion), 2 on a usage error.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::acceptance::run_all;
use crate::alex_module::{
    alexander_polynomial, coloring_module_decomposition, elementary_divisors, load_matrix, m_from_seifert,
    builtin_matrix, matrix_fixture_names, module_order, Origin, SeifertData,
};
use crate::coloring::{brute_force_count, coloring_dimension, phi_polynomial};
use crate::diagram::{builtin_fixture, fixture_names, load_diagram, Cycle, LinkDiagram, Partition};
use crate::field_poly::PrimeModulus;
use crate::invariants::{
    aq_search, genus1_report, genus_bounds, partitioned_genus_bounds, tunnel_bound, PartitionKind, SearchConfig,
};
use crate::quandle::AlexanderQuandle;

#[derive(Parser, Debug)]
#[command(name = "aqinv", version, about = "Alexander-quandle coloring invariants of links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coloring space of a diagram for one quandle and cycle.
    Color {
        /// Diagram file or catalog name.
        #[arg(long)]
        diagram: String,
        /// Quandle, e.g. "p=3 h=1+t".
        #[arg(long)]
        quandle: String,
        /// One label per partition block, comma separated (default: 1 on
        /// every block).
        #[arg(long)]
        cycle: Option<String>,
        /// Blocks of components such as "1,2|3" (default: one block).
        #[arg(long)]
        partition: Option<String>,
        /// Also count colorings by enumeration.
        #[arg(long)]
        oracle: bool,
        /// Print a basis of the coloring space as arc -> coefficients.
        #[arg(long)]
        basis: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The generating polynomial of a_X over all cycles.
    Phi {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        partition: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Alexander polynomial, and elementary divisors modulo a prime.
    Alex {
        /// Matrix file or catalog name.
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        prime: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Coloring module as a sum of copies of F(p, h).
    Decompose {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        quandle: String,
        #[arg(long, default_value_t = 1)]
        z: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Search for A_Q with witnesses and certificates.
    Aq {
        #[arg(long)]
        matrix: String,
        /// Every odd prime up to this bound is searched.
        #[arg(long, default_value_t = 199)]
        pmax: u64,
        /// Extra primes to search (repeatable).
        #[arg(long)]
        prime: Vec<u64>,
        /// Include every searched quandle in the output.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Genus-one closed forms from Seifert data or from M.
    Genus1 {
        #[arg(long, conflicts_with = "m", required_unless_present = "m")]
        matrix: Option<String>,
        /// Special-diagram matrix M as "m11,m12;m21,m22".
        #[arg(long)]
        m: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Genus and tunnel-number lower bounds from a-values.
    Bounds {
        /// A lower bound on A_Q(L, P).
        #[arg(long)]
        aq: Option<u64>,
        #[arg(long, default_value_t = 1)]
        components: usize,
        /// Number of partition blocks (defaults by kind).
        #[arg(long)]
        partition_size: Option<usize>,
        #[arg(long, default_value = "minimal")]
        kind: String,
        /// a-values per cycle, e.g. "1,1=5;0,1=1".
        #[arg(long)]
        values: Option<String>,
        /// Component count per block, e.g. "1,1".
        #[arg(long)]
        blocks: Option<String>,
        /// Changed blocks (1-based), e.g. "1".
        #[arg(long)]
        changed: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// List the catalog, or print one entry.
    Fixtures {
        /// Print this diagram or matrix in its file format.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Run the acceptance suite.
    Selftest,
}

/// A failure after argument parsing: usage (2) or computation (1).
enum Failure {
    Usage(String),
    Compute(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn compute<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Compute(e.to_string())
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Compute(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn parse_quandle(s: &str) -> Result<AlexanderQuandle, Failure> {
    s.parse().map_err(usage)
}

fn diagram_and_partition(diagram: &str, partition: Option<&str>) -> Result<(LinkDiagram, Partition), Failure> {
    let d = load_diagram(diagram).map_err(compute)?;
    let p = match partition {
        Some(s) => Partition::parse(s, d.components).map_err(usage)?,
        None => Partition::minimal(d.components),
    };
    Ok((d, p))
}

fn emit(out: &mut dyn Write, format: Format, text: String, value: impl Serialize) -> Result<i32, Failure> {
    let s = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).map_err(compute)? + "\n",
    };
    out.write_all(s.as_bytes()).map_err(compute)?;
    Ok(0)
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| Failure::Usage(format!("bad {what} '{s}'"))))
        .collect()
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Color { diagram, quandle, cycle, partition, oracle, basis, common } => {
            let x = parse_quandle(&quandle)?;
            let (d, part) = diagram_and_partition(&diagram, partition.as_deref())?;
            let z = match cycle {
                Some(s) => Cycle::parse(&s).map_err(usage)?,
                None => Cycle::constant(part.len(), 1),
            };
            if z.0.len() != part.len() {
                return Err(Failure::Usage(format!("cycle {z} needs {} labels", part.len())));
            }
            let r = coloring_dimension(&d, &part, &z, &x).map_err(compute)?;
            let mut text = format!("d={} a={} count={}\n", r.d, r.a, r.count);
            let mut brute = None;
            if oracle {
                let n = brute_force_count(&d, &part, &z, &x).map_err(compute)?;
                text.push_str(&format!("oracle={n} match={}\n", r.count == n.into()));
                brute = Some(n);
            }
            if basis {
                text.push_str(&r.basis_table(&d, &x));
            }
            let value = json!({
                "diagram": d.name, "quandle": x.spec(), "partition": part.to_string(), "cycle": z.to_string(),
                "result": r, "oracle": brute,
            });
            emit(out, common.format, text, value)
        }
        Command::Phi { diagram, quandle, partition, common } => {
            let x = parse_quandle(&quandle)?;
            let (d, part) = diagram_and_partition(&diagram, partition.as_deref())?;
            let phi = phi_polynomial(&d, &part, &x).map_err(compute)?;
            let mut text = format!("phi={phi}\n");
            for (z, a) in &phi.values {
                text.push_str(&format!("{z} -> {a}\n"));
            }
            let value = json!({
                "diagram": d.name, "quandle": x.spec(), "partition": part.to_string(), "phi": phi.to_string(),
                "values": phi.values.iter().map(|(z, a)| (z.to_string(), *a)).collect::<BTreeMap<_, _>>(),
            });
            emit(out, common.format, text, value)
        }
        Command::Alex { matrix, prime, common } => {
            let m = prime.map(PrimeModulus::new).transpose().map_err(usage)?;
            let sd = load_matrix(&matrix).map_err(compute)?;
            alex(&sd, m, common.format, out)
        }
        Command::Decompose { matrix, quandle, z, common } => {
            let x = parse_quandle(&quandle)?;
            let sd = load_matrix(&matrix).map_err(compute)?;
            let dec = coloring_module_decomposition(&sd, &x, z);
            let mut text = format!("module={dec}\na={}\n", dec.a);
            for s in &dec.summands {
                text.push_str(&format!("e_{}(t^{z})={} gcd={}\n", s.index, s.e, s.gcd));
            }
            emit(out, common.format, text, &dec)
        }
        Command::Aq { matrix, pmax, prime, all, common } => {
            for &p in &prime {
                PrimeModulus::new(p).map_err(usage)?;
            }
            let sd = load_matrix(&matrix).map_err(compute)?;
            let config = SearchConfig { pmax, extra_primes: prime };
            let mut report = aq_search(&sd, &config);
            let text = report.to_text();
            if !all {
                report.searched.clear();
            }
            emit(out, common.format, text, &report)
        }
        Command::Genus1 { matrix, m, common } => {
            let mat: Vec<Vec<BigInt>> = match (m, matrix) {
                (Some(s), _) => parse_m(&s)?,
                (None, Some(path)) => m_from_seifert(&load_matrix(&path).map_err(compute)?).map_err(compute)?,
                (None, None) => unreachable!("clap requires one of --matrix, --m"),
            };
            let r = genus1_report(&mat).map_err(compute)?;
            emit(out, common.format, r.to_string(), &r)
        }
        Command::Bounds { aq, components, partition_size, kind, values, blocks, changed, common } => {
            let kind: PartitionKind = kind.parse().map_err(usage)?;
            bounds(aq, components, partition_size, kind, values, blocks, changed, common.format, out)
        }
        Command::Fixtures { emit: name } => {
            let text = match name {
                Some(n) => match builtin_fixture(&n) {
                    Ok(d) => d.to_text(),
                    Err(_) => builtin_matrix(&n).map_err(compute)?.to_text(),
                },
                None => format!(
                    "diagrams: {}\nmatrices: {}\n",
                    fixture_names().join(" "),
                    matrix_fixture_names().join(" ")
                ),
            };
            out.write_all(text.as_bytes()).map_err(compute)?;
            Ok(0)
        }
        Command::Selftest => {
            let results = run_all();
            for r in &results {
                writeln!(out, "{r}").map_err(compute)?;
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            writeln!(out, "{} passed, {failed} failed", results.len() - failed).map_err(compute)?;
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn parse_m(s: &str) -> Result<Vec<Vec<BigInt>>, Failure> {
    let rows: Vec<Vec<BigInt>> = s.split(';').map(|r| parse_list(r, "matrix M")).collect::<Result<_, _>>()?;
    if rows.len() != 2 || rows.iter().any(|r| r.len() != 2) {
        return Err(Failure::Usage(format!("M must be 2x2, got '{s}'")));
    }
    Ok(rows)
}

fn alex(sd: &SeifertData, m: Option<PrimeModulus>, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut text = format!("name: {}\ncomponents: {}\norder: {}\n", sd.name, sd.k, sd.order());
    let mut value = json!({ "name": sd.name, "components": sd.k, "order": sd.order() });
    match sd.origin {
        Origin::Seifert => {
            let (delta, a) = alexander_polynomial(sd).map_err(compute)?;
            text.push_str(&format!("alexander: {}\nA: {a}\n", delta.canonical()));
            value["alexander"] = json!(delta.canonical().to_string());
            value["A"] = json!(a);
        }
        Origin::Presentation => {
            let order = module_order(sd).canonical();
            text.push_str(&format!("module_order: {order}\n"));
            value["module_order"] = json!(order.to_string());
        }
    }
    if let Some(m) = m {
        let ed = elementary_divisors(sd, m);
        let p = m.get();
        let e: Vec<String> = ed.e.iter().map(|f| f.canonical().to_string()).collect();
        let deltas: Vec<String> = (1..=sd.order()).map(|i| ed.delta(i).to_string()).collect();
        for (i, f) in e.iter().enumerate() {
            text.push_str(&format!("e_{}^({p}): {f}\n", i + 1));
        }
        for (i, f) in deltas.iter().enumerate() {
            text.push_str(&format!("Delta_{}^({p}): {f}\n", i + 1));
        }
        value["p"] = json!(p);
        value["e"] = json!(e);
        value["delta"] = json!(deltas);
    }
    emit(out, format, text, value)
}

#[allow(clippy::too_many_arguments)]
fn bounds(
    aq: Option<u64>,
    components: usize,
    partition_size: Option<usize>,
    kind: PartitionKind,
    values: Option<String>,
    blocks: Option<String>,
    changed: Option<String>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut text = String::new();
    let mut value = json!({});
    if let Some(aq) = aq {
        let size = partition_size.unwrap_or(match kind {
            PartitionKind::Maximal => components,
            _ => 1,
        });
        let g = genus_bounds(aq, components, size, kind).map_err(usage)?;
        let t = tunnel_bound(aq);
        text.push_str(&format!("genus_lower: {g}\n"));
        value["genus_lower"] = json!(g);
        if kind == PartitionKind::Maximal || components == 1 {
            text.push_str(&format!("tunnel_lower: {t}\n"));
            value["tunnel_lower"] = json!(t);
        }
    }
    if let Some(vals) = values {
        let mut map = BTreeMap::new();
        for item in vals.split(';') {
            let (z, a) = item.split_once('=').ok_or_else(|| Failure::Usage(format!("bad value '{item}'")))?;
            let a: usize = a.trim().parse().map_err(|_| Failure::Usage(format!("bad value '{item}'")))?;
            map.insert(Cycle::parse(z).map_err(usage)?, a);
        }
        let sizes: Vec<usize> = match blocks {
            Some(b) => parse_list(&b, "block sizes")?,
            None => vec![1; map.keys().next().map_or(0, |z| z.0.len())],
        };
        let changed: BTreeSet<usize> = match changed {
            Some(c) => parse_list(&c, "changed blocks")?.into_iter().collect(),
            None => return Err(Failure::Usage("--values needs --changed".into())),
        };
        let r = partitioned_genus_bounds(&map, &sizes, &changed).map_err(usage)?;
        text.push_str(&format!("changed_blocks_genus_lower: {}\n", r.bound));
        value["changed_blocks_genus_lower"] = json!(r.bound);
    }
    if text.is_empty() {
        return Err(Failure::Usage("bounds needs --aq or --values".into()));
    }
    emit(out, format, text, value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("aqinv").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn color_example() {
        let (code, out, _) = call(&["color", "--diagram", "trefoil", "--quandle", "p=3 h=1+t", "--cycle", "1"]);
        assert_eq!((code, out.as_str()), (0, "d=2 a=1 count=9\n"));
        let (code, out, _) = call(&["color", "--diagram", "trefoil", "--quandle", "p=3 h=1+t", "--oracle"]);
        assert_eq!(code, 0);
        assert!(out.contains("oracle=9 match=true"));
    }

    #[test]
    fn aq_and_alex_examples() {
        let (code, out, _) = call(&["aq", "--matrix", "kp_matrix_p3.txt", "--pmax", "13"]);
        assert_eq!(code, 0);
        assert!(out.contains("aq_lower_bound: 2"));
        assert!(out.contains("(3, 1 + t, 1) a=2"));
        assert!(out.contains("exact: true"));
        let (code, out, _) = call(&["alex", "--matrix", "inoue_remark.txt", "--prime", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("e_") && l.ends_with("^(3): 1 + 2*t + t^2")).count(), 4, "{out}");
        let (code, out, _) = call(&["aq", "--matrix", "trefoil", "--pmax", "7", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["aq_lower_bound"], 1);
        assert_eq!(v["certificate"], "genus1_closed_form");
    }

    #[test]
    fn errors() {
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["color", "--diagram", "trefoil"]).0, 2);
        assert_eq!(call(&["color", "--diagram", "trefoil", "--quandle", "p=4 h=1+t"]).0, 2);
        assert_eq!(call(&["color", "--diagram", "trefoil", "--quandle", "p=3 h=1+t", "--cycle", "1,1"]).0, 2);
        assert_eq!(call(&["color", "--diagram", "/no/such/file", "--quandle", "p=3 h=1+t"]).0, 1);
        assert_eq!(call(&["alex", "--matrix", "trefoil", "--prime", "9"]).0, 2);
        assert_eq!(call(&["genus1", "--m", "1,2;3"]).0, 2);
        assert_eq!(call(&["bounds"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn other_subcommands() {
        let (code, out, _) = call(&["genus1", "--m", "0,-1;-2,3"]);
        assert_eq!(code, 0);
        assert!(out.contains("aq_exact: 2") && out.contains("det_K: 9"));
        let (_, out, _) = call(&["bounds", "--aq", "3"]);
        assert_eq!(out, "genus_lower: 2\ntunnel_lower: 3\n");
        let (_, out, _) = call(&["bounds", "--values", "1,1=5;0,1=1", "--blocks", "1,1", "--changed", "1"]);
        assert_eq!(out, "changed_blocks_genus_lower: 2\n");
        let (_, out, _) = call(&["bounds", "--aq", "5", "--components", "2", "--kind", "maximal"]);
        assert!(out.starts_with("genus_lower: 2\n"));
        let (_, out, _) = call(&["phi", "--diagram", "trefoil", "--quandle", "p=3 h=1+t"]);
        assert!(out.starts_with("phi=1 + t\n"), "{out}");
        let (_, out, _) = call(&["decompose", "--matrix", "trefoil", "--quandle", "p=3 h=1+t"]);
        assert!(out.starts_with("module=F(3, 1 + t) + F(3, 1 + t)^1\n"), "{out}");
        let (_, out, _) = call(&["fixtures"]);
        assert!(out.contains("k3_pretzel") && out.contains("inoue_remark"));
        let (code, out, _) = call(&["fixtures", "--emit", "hopf"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("matrix hopf"));
    }

    #[test]
    fn deterministic_reports() {
        let args = ["aq", "--matrix", "torus_2_7", "--pmax", "40", "--format", "json", "--all"];
        assert_eq!(call(&args).1, call(&args).1);
    }
}
