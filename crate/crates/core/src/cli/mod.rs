//! The `netext` command line: argument parsing, dispatch and report
//! rendering. Exit status 0 on success, 1 for an infeasible ledger under
//! `--strict`, 2 for usage and parse errors, 3 for semantic errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{analyze, distribution_check, equality_ledger, BoundsReport, DistributionReport, LedgerReport};
use crate::compressionbody::classify_delta_zero;
use crate::decomposition::{capital_delta, link_parity, netchi, netext, sum_delta, surger, Decomposition, GraphKind};
use crate::enumerator::{compare, enumerate, ClassificationTable, EnumSpec};
use crate::error::Error;
use crate::verify::{run_all, VerifyOptions};

pub mod schema;

use schema::{read_decomposition_file, read_factor_file, DecompositionFile, SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "netext", version, about = "Net extent calculus and tunnel and bridge number bounds")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every admissible body type for a positive boundary.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=2))]
        genus: u32,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=4))]
        max_punctures: u32,
        /// Compare with the built-in table; exit 3 if they differ.
        #[arg(long)]
        compare: bool,
        /// Include every rejected candidate and the invariant it broke.
        #[arg(long)]
        rejections: bool,
        #[arg(long)]
        max_neg: Option<usize>,
        #[arg(long)]
        max_ghost: Option<usize>,
    },
    /// Lower bounds from a factor file.
    Bounds {
        file: String,
        /// Exit 1 when the equality ledger is infeasible.
        #[arg(long)]
        strict: bool,
    },
    /// The equality ledger and distribution checks for a factor file.
    Ledger {
        file: String,
        #[arg(long)]
        strict: bool,
    },
    /// Validate a decomposition file and report its net invariants.
    Check {
        file: String,
        /// Cut along the named thin sphere.
        #[arg(long)]
        surger: Option<String>,
    },
    /// Run every verification suite and print a pass/fail table.
    VerifyLemmas {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_factors: usize,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    let result = match cli.command {
        Command::Enumerate { genus, max_punctures, compare, rejections, max_neg, max_ghost } => {
            cmd_enumerate(cli.format, genus, max_punctures, compare, rejections, max_neg, max_ghost, out)
        }
        Command::Bounds { file, strict } => cmd_bounds(cli.format, &file, strict, false, out),
        Command::Ledger { file, strict } => cmd_bounds(cli.format, &file, strict, true, out),
        Command::Check { file, surger } => cmd_check(cli.format, &file, surger.as_deref(), out),
        Command::VerifyLemmas { samples, seed, max_factors } => {
            cmd_verify(cli.format, VerifyOptions { random_samples: samples, seed, max_factors }, out)
        }
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

/// Applies NETEXT_THREADS to the global worker pool.
fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("NETEXT_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("NETEXT_THREADS must be a positive integer, got {v:?}"))?;
    // a pool that already exists keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn semantic(e: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_SEMANTIC, message: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

fn emit_json(out: &mut dyn Write, v: &Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    format: Format,
    genus: u32,
    max_p: u32,
    compare_table: bool,
    rejections: bool,
    max_neg: Option<usize>,
    max_ghost: Option<usize>,
    out: &mut dyn Write,
) -> CmdResult {
    let mut spec = EnumSpec::exhaustive(genus, max_p);
    if let Some(n) = max_neg {
        spec.max_neg_components = n;
    }
    if let Some(e) = max_ghost {
        spec.max_ghost_arcs = e;
    }
    spec.record_rejections = rejections;
    spec.check().map_err(|e| Failure::usage(e.to_string()))?;

    let table = if compare_table {
        let t = ClassificationTable::builtin(genus).ok_or_else(|| Failure::usage("no table for this genus"))?;
        Some(t.restricted(max_p).map_err(|e| Failure::usage(e.to_string()))?)
    } else {
        None
    };
    let found = enumerate(spec);
    let diff = table.as_ref().map(|t| compare(&found.keys(), t));
    let label = |k| table.as_ref().and_then(|t| t.label_of(k)).map(String::from);

    match format {
        Format::Json => {
            let types: Vec<Value> = found
                .types
                .iter()
                .map(|(k, b)| {
                    json!({
                        "key": k,
                        "label": label(k),
                        "delta": b.delta_unchecked(),
                        "class": classify_delta_zero(b).map(|c| c.to_string()).unwrap_or_default(),
                        "body": b,
                    })
                })
                .collect();
            let mut v = json!({
                "schema": SCHEMA,
                "command": "enumerate",
                "spec": spec,
                "total": found.len(),
                "candidates": found.candidates,
                "counts": found.counts_by_punctures(),
                "types": types,
                "diff": diff,
            });
            if rejections {
                v["rejections"] = json!(found.rejections);
            }
            emit_json(out, &v);
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "genus {genus}, at most {max_p} punctures: {} types ({} candidates)",
                found.len(),
                found.candidates
            );
            let counts: Vec<String> = found.counts_by_punctures().iter().map(|(p, c)| format!("p={p}: {c}")).collect();
            let _ = writeln!(out, "  {}", counts.join("  "));
            for (k, b) in &found.types {
                let class = classify_delta_zero(b).map(|c| c.to_string()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "  {:<32} delta {}  {:<14} {k}",
                    label(k).unwrap_or_else(|| "-".into()),
                    b.delta_unchecked(),
                    class
                );
            }
            if rejections {
                let _ = writeln!(out, "rejected {}:", found.rejections.len());
                for r in &found.rejections {
                    let src = serde_json::to_value(r.source).ok().and_then(|s| s.as_str().map(String::from));
                    let _ = writeln!(out, "  {:<28} {:<10} {}", r.invariant, src.unwrap_or_default(), r.body);
                }
            }
            if let Some(d) = &diff {
                let _ = write!(out, "{}", d.render_text());
            }
        }
    }
    Ok(match diff {
        Some(d) if !d.is_empty() => EXIT_SEMANTIC,
        _ => EXIT_OK,
    })
}

fn ledger_phrase(l: &LedgerReport) -> String {
    if l.lhs == l.rhs {
        format!("ledger {} ≤ {} (tight)", l.lhs, l.rhs)
    } else if l.feasible {
        format!("ledger {} ≤ {} (slack {})", l.lhs, l.rhs, l.slack())
    } else {
        format!("ledger {} > {} (infeasible)", l.lhs, l.rhs)
    }
}

/// The strongest tunnel and bridge bounds in a report, as one line.
pub fn summary_line(r: &BoundsReport) -> String {
    let mut parts = Vec::new();
    let tunnel = [r.tunnel.as_ref().map(|t| t.ceil), r.brunnian.map(|b| b.0), r.m_small].into_iter().flatten().max();
    if let Some(t) = tunnel {
        parts.push(format!("tunnel ≥ {t}"));
    }
    if let Some(l) = &r.ledger {
        parts.push(ledger_phrase(l));
    }
    let bridge = [r.bridge.as_ref().map(|b| b.value), r.brunnian.map(|b| b.1)].into_iter().flatten().max();
    if let Some(b) = bridge {
        parts.push(format!("bridge ≥ {b}"));
    }
    parts.join("; ")
}

fn render_distribution(out: &mut dyn Write, d: &DistributionReport) {
    match d {
        DistributionReport::NotApplicable { reason } => {
            let _ = writeln!(out, "distribution: not applicable ({reason})");
        }
        DistributionReport::Checked { lines } => {
            for (i, l) in lines.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "distribution {}: {} ≥ {}/{} {}",
                    i + 1,
                    l.counted,
                    l.threshold.0,
                    l.threshold.1,
                    if l.holds { "holds" } else { "FAILS" }
                );
            }
        }
    }
}

fn cmd_bounds(format: Format, path: &str, strict: bool, ledger_only: bool, out: &mut dyn Write) -> CmdResult {
    let file = read_factor_file(path).map_err(|e| Failure::usage(e.to_string()))?;
    let f = file.factorization().map_err(Failure::semantic)?;
    let (report, ledger, distribution) = if ledger_only {
        let l = equality_ledger(&f).map_err(Failure::semantic)?;
        let d = distribution_check(&f).map_err(Failure::semantic)?;
        (None, Some(l), Some(d))
    } else {
        let r = analyze(&f, &file.flags).map_err(Failure::semantic)?;
        let (l, d) = (r.ledger.clone(), r.distribution.clone());
        (Some(r), l, d)
    };
    let infeasible = ledger.as_ref().is_some_and(|l| !l.feasible);

    match format {
        Format::Json => {
            let mut v = json!({
                "schema": SCHEMA,
                "command": if ledger_only { "ledger" } else { "bounds" },
                "factors": f.factors,
                "counts": f.counts(),
                "ledger": ledger,
                "distribution": distribution,
            });
            if let Some(r) = &report {
                v["summary"] = json!(summary_line(r));
                v["bounds"] = json!(r);
            }
            emit_json(out, &v);
        }
        Format::Text => {
            let c = f.counts();
            let _ = writeln!(out, "factors: {f}");
            let _ = writeln!(
                out,
                "n = {}, m = {} (tunnel) / {} (bridge), k = {} / {} (all knots)",
                c.n, c.m_tunnel, c.m_bridge, c.k, c.k_all
            );
            if let Some(r) = &report {
                let _ = writeln!(out, "{}", summary_line(r));
                if let Some(b) = &r.netext {
                    let _ = writeln!(out, "netext ≥ {}", b.value);
                }
                if let Some(t) = &r.tunnel {
                    let _ = writeln!(out, "tunnel ≥ {} (integer ≥ {})", t.value, t.ceil);
                }
                if let Some(b) = &r.bridge {
                    let eq = if b.equality_possible { "possible" } else { "impossible" };
                    let _ = writeln!(out, "bridge ≥ {} (equality {eq})", b.value);
                }
                if let Some((t, b)) = r.brunnian {
                    let _ = writeln!(out, "brunnian: tunnel ≥ {t}, bridge ≥ {b}");
                }
                if let Some(m) = r.m_small {
                    let _ = writeln!(out, "m-small sum: tunnel ≥ {m}");
                }
            }
            if let Some(l) = &ledger {
                let _ = writeln!(out, "{}", ledger_phrase(l));
                for (term, v) in &l.terms {
                    let _ = writeln!(out, "  {term}: {v}");
                }
            }
            if let Some(d) = &distribution {
                render_distribution(out, d);
            }
            if let Some(r) = &report {
                for line in [&r.netext.as_ref().map(|b| &b.trace), &r.tunnel.as_ref().map(|b| &b.trace)]
                    .into_iter()
                    .flatten()
                    .chain(r.bridge.as_ref().map(|b| &b.trace).iter())
                    .flat_map(|t| t.iter())
                {
                    let _ = writeln!(out, "trace: {line}");
                }
                for n in &r.notes {
                    let _ = writeln!(out, "note: {n}");
                }
            }
        }
    }
    Ok(if strict && infeasible { EXIT_INFEASIBLE } else { EXIT_OK })
}

fn decomposition_json(d: &Decomposition) -> Value {
    json!(DecompositionFile::from_decomposition(d))
}

fn summary_json(d: &Decomposition) -> Value {
    let bodies: Vec<Value> = d
        .bodies
        .iter()
        .map(|b| {
            json!({
                "name": b.name,
                "delta": b.body.delta_unchecked(),
                "class": classify_delta_zero(&b.body).map(|c| c.to_string()).unwrap_or_default(),
            })
        })
        .collect();
    json!({
        "netext": netext(d).ok(),
        "netchi": netchi(d).ok(),
        "capital_delta": capital_delta(d).ok(),
        "sum_delta": sum_delta(d).ok(),
        "identity": capital_delta(d).ok() == sum_delta(d).ok(),
        "graph_kind": d.ambient.graph_kind,
        "bodies": bodies,
    })
}

fn render_summary(out: &mut dyn Write, d: &Decomposition, indent: &str) {
    let (Ok(ne), Ok(nc), Ok(cd), Ok(sd)) = (netext(d), netchi(d), capital_delta(d), sum_delta(d)) else {
        return;
    };
    let _ = writeln!(
        out,
        "{indent}{} bodies, {} thick, {} thin; {}",
        d.bodies.len(),
        d.thick.len(),
        d.thin.len(),
        d.ambient.graph_kind
    );
    let _ = writeln!(out, "{indent}netext {ne}");
    let _ = writeln!(out, "{indent}netchi {nc}");
    let verdict = if cd == sd { "holds" } else { "FAILS" };
    let _ = writeln!(out, "{indent}Δ {cd} = Σδ {sd} ({verdict})");
    if d.ambient.graph_kind == GraphKind::KnotLink {
        if let Ok(p) = link_parity(d) {
            let _ = writeln!(out, "{indent}netext integral: {}", if p { "yes" } else { "no" });
        }
    }
    for b in &d.bodies {
        let class = classify_delta_zero(&b.body).map(|c| c.to_string()).unwrap_or_default();
        let _ = writeln!(out, "{indent}  {:<6} δ {}  {:<14} {}", b.name, b.body.delta_unchecked(), class, b.body);
    }
}

fn cmd_check(format: Format, path: &str, surger_name: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let file = read_decomposition_file(path).map_err(|e| Failure::usage(e.to_string()))?;
    let d = match file.to_decomposition() {
        Ok(d) => d,
        Err(Error::InvalidDecomposition(v)) => {
            return report_invalid(
                format,
                out,
                v.iter().map(|x| (x.invariant.to_string(), x.detail.clone())).collect(),
            );
        }
        Err(e) => return Err(Failure::semantic(e)),
    };
    let report = d.validate();
    if !report.is_valid() {
        return report_invalid(
            format,
            out,
            report.violations.iter().map(|x| (x.invariant.to_string(), x.detail.clone())).collect(),
        );
    }

    let surgery = match surger_name {
        None => None,
        Some(name) => {
            let i = d.thin_index(name).ok_or_else(|| Failure::semantic(format!("no thin surface named {name}")))?;
            Some(surger(&d, i).map_err(Failure::semantic)?)
        }
    };

    match format {
        Format::Json => {
            let mut v = json!({
                "schema": SCHEMA,
                "command": "check",
                "valid": true,
                "topological_order": report.topological_order.map(|o| o.iter().map(|&i| d.bodies[i].name.clone()).collect::<Vec<_>>()),
                "summary": summary_json(&d),
            });
            if let Some((a, b, r)) = &surgery {
                v["surgery"] = json!({
                    "report": r,
                    "children": [
                        {"summary": summary_json(a), "decomposition": decomposition_json(a)},
                        {"summary": summary_json(b), "decomposition": decomposition_json(b)},
                    ],
                });
            }
            emit_json(out, &v);
        }
        Format::Text => {
            let _ = writeln!(out, "{path}: valid");
            render_summary(out, &d, "");
            if let Some((a, b, r)) = &surgery {
                let _ = writeln!(out, "surgery along {} ({}-punctured sphere):", r.thin, r.punctures);
                for (i, c) in [a, b].iter().enumerate() {
                    let _ = writeln!(out, "  child {}:", i + 1);
                    render_summary(out, c, "    ");
                }
                let _ = writeln!(
                    out,
                    "  netchi {} = {} + {} + 2 ({})",
                    r.netchi[0],
                    r.netchi[1],
                    r.netchi[2],
                    if r.netchi_identity { "holds" } else { "FAILS" }
                );
                let _ = writeln!(
                    out,
                    "  netext {} = {} + {} − {} ({})",
                    r.netext[0],
                    r.netext[1],
                    r.netext[2],
                    r.correction,
                    if r.netext_identity { "holds" } else { "FAILS" }
                );
            }
        }
    }
    Ok(match &surgery {
        Some((_, _, r)) if !r.holds() => EXIT_SEMANTIC,
        _ => EXIT_OK,
    })
}

fn report_invalid(format: Format, out: &mut dyn Write, violations: Vec<(String, String)>) -> CmdResult {
    match format {
        Format::Json => {
            let v: Vec<Value> = violations.iter().map(|(i, d)| json!({"invariant": i, "detail": d})).collect();
            emit_json(out, &json!({"schema": SCHEMA, "command": "check", "valid": false, "violations": v}));
        }
        Format::Text => {
            let _ = writeln!(out, "invalid decomposition:");
            for (i, d) in &violations {
                let _ = writeln!(out, "  {i}: {d}");
            }
        }
    }
    Ok(EXIT_SEMANTIC)
}

fn cmd_verify(format: Format, opts: VerifyOptions, out: &mut dyn Write) -> CmdResult {
    let results = run_all(&opts);
    let all = results.iter().all(|r| r.passed);
    match format {
        Format::Json => {
            emit_json(out, &json!({"schema": SCHEMA, "command": "verify-lemmas", "passed": all, "suites": results}))
        }
        Format::Text => {
            for r in &results {
                let _ = writeln!(
                    out,
                    "{:<4} {:<20} {:>8.2}s  {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.seconds,
                    r.detail
                );
            }
            let _ = writeln!(out, "{}", if all { "all suites pass" } else { "some suites FAIL" });
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_SEMANTIC })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("netext").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["enumerate", "--genus", "3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["enumerate", "--genus", "1", "--max-punctures", "5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["bounds", "/nonexistent.json"]).0, EXIT_USAGE);
    }

    #[test]
    fn compare_beyond_table_is_usage_error() {
        let (code, _, err) = run_str(&["enumerate", "--genus", "1", "--max-punctures", "3", "--compare"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("covers at most 2"));
    }

    #[test]
    fn sphere_json() {
        let (code, out, _) = run_str(&["--format", "json", "enumerate", "--genus", "0", "--compare"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["total"], 5);
        assert_eq!(v["counts"]["4"], 3);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify-lemmas"));
    }
}
