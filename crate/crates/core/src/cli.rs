//! The `domcount` command line.
//!
//! [`run`] takes the full argument vector and the bytes of standard input
//! and returns the exit code with everything that would have been written,
//! so the binary is a thin shell around it and tests can drive it directly.
//!
//! Exit codes: 0 success, 1 a verification or proven bound failed, 2 bad
//! usage or bad input.
//!
//! `verify --tsv` columns, tab separated, one tree per line after a header:
//! `graph6`, `n`, `gamma` (γ or γ_t), `count`, `verdicts` (comma separated
//! `bound=pass|FAIL`).

use crate::audit::audit_claims;
use crate::bounds::{bound_report, lambda, ln_lambda_from_counts, BoundKind, Verdict};
use crate::dp::{count, enumerate, ln_count, Mode};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::forest::Forest;
use crate::format::{parse_forest, to_edge_list, to_graph6, Format};
use crate::structure::structural_report;
use crate::verify::{
    lambda_sweep, verify_family_formulas, verify_henning, verify_sqrt5, MaximizerTable, TreeRecord,
    DEFAULT_HENNING_MAX_N, DEFAULT_SQRT5_MAX_N,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::ops::RangeInclusive;

pub const THREADS_VAR: &str = "DOMCOUNT_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "domcount",
    version,
    about = "Count minimum (total) dominating sets in forests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print γ and Γ (or γ_t and Γ_t)
    Count(InputArgs),
    /// List every minimum (total) dominating set, one per line
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// Refuse if there are more sets than this
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
    },
    /// Counts, terminal levels, support vertices and the claims audit
    Analyze {
        #[command(flatten)]
        input: InputOnly,
    },
    /// Emit a member of an extremal family
    Generate {
        #[command(subcommand)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::EdgeList, global = true)]
        output: OutputFormat,
    },
    /// Compare the count with every bound that applies to the mode
    Bounds(InputArgs),
    /// λ = Γ_t^{1/γ_t}·((n − γ_t/2)/(γ_t/2))^{-1/2}
    Lambda {
        #[command(flatten)]
        input: InputOnly,
    },
    /// Exhaustive checks over small trees and families
    Verify {
        #[command(subcommand)]
        what: VerifyArg,
    },
    /// λ of G(k,l,m) over a parameter box, largest first
    Sweep {
        #[arg(long, default_value = "1..4", value_parser = parse_range)]
        k: RangeInclusive<usize>,
        #[arg(long, default_value = "1..32", value_parser = parse_range)]
        l: RangeInclusive<usize>,
        #[arg(long, default_value = "1..4", value_parser = parse_range)]
        m: RangeInclusive<usize>,
        /// Rows to print; 0 prints all
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
}

#[derive(Args, Debug)]
struct InputOnly {
    /// File to read, or - for standard input
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
}

#[derive(Args, Debug)]
struct InputArgs {
    #[command(flatten)]
    input: InputOnly,
    #[arg(long, value_enum, default_value_t = ModeArg::Dom)]
    mode: ModeArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Dom,
    Total,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Dom => Mode::Domination,
            ModeArg::Total => Mode::Total,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    EdgeList,
    Graph6,
    Auto,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Format {
        match f {
            InputFormat::EdgeList => Format::EdgeList,
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::Auto => Format::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    EdgeList,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum FamilyArg {
    /// G_k (5k + 2 vertices)
    Gk { k: usize },
    /// H_k (5k + 5 vertices)
    Hk { k: usize },
    /// G(k,l,m)
    Gklm { k: usize, l: usize, m: usize },
    /// N copies of G(3,16,3) joined leaf to leaf
    Chain { copies: usize },
}

#[derive(Subcommand, Debug)]
enum VerifyArg {
    /// Γ² ≤ 5^γ on every tree up to --max-n vertices
    Sqrt5 {
        #[arg(long, default_value_t = DEFAULT_SQRT5_MAX_N)]
        max_n: usize,
        /// Print one record per tree instead of the summary
        #[arg(long)]
        tsv: bool,
    },
    /// Γ_t against the three proven total-domination bounds
    Henning {
        #[arg(long, default_value_t = DEFAULT_HENNING_MAX_N)]
        max_n: usize,
        #[arg(long)]
        tsv: bool,
    },
    /// Closed forms of G_k, H_k and G(k,l,m) against the DP
    Families {
        #[arg(long, default_value_t = 10)]
        max_k: usize,
        #[arg(long, default_value_t = 4)]
        max_klm: usize,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs with the worker count taken from `DOMCOUNT_THREADS`.
pub fn run<I, S>(args: I, stdin: &[u8]) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let threads = std::env::var(THREADS_VAR).ok();
    run_with_threads(args, stdin, threads.as_deref())
}

/// Same as [`run`] with an explicit value for `DOMCOUNT_THREADS`.
pub fn run_with_threads<I, S>(args: I, stdin: &[u8], threads: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let threads = match threads.map(str::trim) {
        None | Some("") => std::thread::available_parallelism().map_or(1, |n| n.get()),
        Some(t) => match t.parse::<usize>() {
            Ok(n) if n >= 1 => n,
            _ => {
                return Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: {THREADS_VAR} must be a positive integer, got {t:?}\n"),
                }
            }
        },
    };
    let mut out = String::new();
    match dispatch(cli.command, stdin, threads, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: out,
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_input(input: &InputOnly, stdin: &[u8]) -> Result<Forest> {
    let bytes = if input.input == "-" {
        stdin.to_vec()
    } else {
        std::fs::read(&input.input).map_err(|e| Error::Malformed {
            line: 0,
            message: format!("{}: {e}", input.input),
        })?
    };
    parse_forest(&bytes, input.format.into())
}

fn size_label(mode: Mode) -> &'static str {
    match mode {
        Mode::Domination => "gamma",
        Mode::Total => "gamma_t",
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn family(arg: FamilyArg) -> FamilySpec {
    match arg {
        FamilyArg::Gk { k } => FamilySpec::Gk { k },
        FamilyArg::Hk { k } => FamilySpec::Hk { k },
        FamilyArg::Gklm { k, l, m } => FamilySpec::Gklm { k, l, m },
        FamilyArg::Chain { copies } => FamilySpec::Chain { copies },
    }
}

fn dispatch(command: Command, stdin: &[u8], threads: usize, out: &mut String) -> Result<i32> {
    match command {
        Command::Count(args) => {
            let f = read_input(&args.input, stdin)?;
            let mode = args.mode.into();
            let c = count(&f, mode)?;
            writeln!(out, "{}={} count={}", size_label(mode), c.size, c.count).unwrap();
        }
        Command::Enumerate { input, limit } => {
            let f = read_input(&input.input, stdin)?;
            for set in enumerate(&f, input.mode.into(), limit)? {
                writeln!(out, "{}", join(set)).unwrap();
            }
        }
        Command::Analyze { input } => {
            let f = read_input(&input, stdin)?;
            analyze(&f, out)?;
        }
        Command::Generate {
            family: arg,
            output,
        } => {
            let f = generate(family(arg))?;
            match output {
                OutputFormat::EdgeList => out.push_str(&to_edge_list(&f)),
                OutputFormat::Graph6 => writeln!(out, "{}", to_graph6(&f)).unwrap(),
            }
        }
        Command::Bounds(args) => {
            let f = read_input(&args.input, stdin)?;
            let report = bound_report(&f, args.mode.into())?;
            writeln!(
                out,
                "n={} {}={} count={} ln_count={:.8} ln_count_raw={}",
                report.n,
                size_label(report.mode),
                report.size,
                report.actual,
                report.ln_actual,
                report.ln_actual
            )
            .unwrap();
            for b in &report.bounds {
                let kind = match b.kind {
                    BoundKind::ProvenUpper => "proven-upper",
                    BoundKind::ConjecturedUpper => "conjectured-upper",
                    BoundKind::Lower => "lower",
                    BoundKind::DisplayOnly => "display-only",
                };
                writeln!(
                    out,
                    "{} {} ln_bound={:.8} ln_bound_raw={} verdict={}{}",
                    b.name,
                    kind,
                    b.ln_value,
                    b.ln_value,
                    b.verdict,
                    if b.exact { " exact" } else { "" }
                )
                .unwrap();
            }
            if let Some(l) = report.lambda {
                writeln!(out, "lambda={l:.8}").unwrap();
            }
            return Ok(if report.theorems_hold() { 0 } else { 1 });
        }
        Command::Lambda { input } => {
            let f = read_input(&input, stdin)?;
            let c = count(&f, Mode::Total)?;
            let ln = ln_lambda_from_counts(f.vertex_count(), c.size, ln_count(&c.count))?;
            writeln!(
                out,
                "lambda={:.8} ln_lambda={} n={} gamma_t={} count={}",
                ln.exp(),
                ln,
                f.vertex_count(),
                c.size,
                c.count
            )
            .unwrap();
        }
        Command::Verify { what } => return verify(what, threads, out),
        Command::Sweep { k, l, m, top } => {
            let report = lambda_sweep(k.clone(), l.clone(), m.clone(), threads)?;
            writeln!(
                out,
                "k={}..{} l={}..{} m={}..{} rows={} any_lambda_above_one={}",
                k.start(),
                k.end(),
                l.start(),
                l.end(),
                m.start(),
                m.end(),
                report.rows.len(),
                report.any_exceeds_one
            )
            .unwrap();
            let shown = if top == 0 { report.rows.len() } else { top };
            for r in report.rows.iter().take(shown) {
                writeln!(
                    out,
                    "k={} l={} m={} n={} gamma_t={} lambda={:.8} ln_lambda={}",
                    r.k,
                    r.l,
                    r.m,
                    r.n,
                    r.gamma_t,
                    r.lambda(),
                    r.ln_lambda
                )
                .unwrap();
            }
        }
    }
    Ok(0)
}

fn analyze(f: &Forest, out: &mut String) -> Result<()> {
    writeln!(
        out,
        "n={} edges={} components={} tree={}",
        f.vertex_count(),
        f.edge_count(),
        f.component_count(),
        f.is_tree()
    )
    .unwrap();
    let dom = count(f, Mode::Domination)?;
    writeln!(out, "gamma={} count={}", dom.size, dom.count).unwrap();
    match count(f, Mode::Total) {
        Ok(t) => {
            writeln!(out, "gamma_t={} count={}", t.size, t.count).unwrap();
            writeln!(out, "lambda={:.8}", lambda(f)?).unwrap();
        }
        Err(Error::IsolatedVertex(v)) => {
            writeln!(out, "gamma_t=undefined isolated_vertex={v}").unwrap();
        }
        Err(e) => return Err(e),
    }
    let r = structural_report(f);
    writeln!(out, "terminal_levels={}", join(&r.terminal_level)).unwrap();
    let support = (0..f.vertex_count()).filter(|&v| r.is_support[v]);
    writeln!(out, "support={}", join(support)).unwrap();
    let strong = (0..f.vertex_count()).filter(|&v| r.is_strong_support[v]);
    writeln!(out, "strong_support={}", join(strong)).unwrap();
    if f.is_tree() {
        for a in audit_claims(f)? {
            let state = if a.satisfied { "holds" } else { "violated" };
            writeln!(out, "audit {} vertex={} {state}", a.claim, a.vertex).unwrap();
        }
    }
    Ok(())
}

fn write_records(records: &[TreeRecord], out: &mut String) {
    writeln!(out, "{}", TreeRecord::TSV_HEADER).unwrap();
    for r in records {
        writeln!(out, "{}", r.to_tsv()).unwrap();
    }
}

fn verify(what: VerifyArg, threads: usize, out: &mut String) -> Result<i32> {
    let pass = match what {
        VerifyArg::Sqrt5 { max_n, tsv } => {
            let t = verify_sqrt5(max_n, threads, tsv)?;
            if tsv {
                write_records(&t.records, out);
                return Ok(exit_code(sqrt5_passes(&t)));
            }
            render_sqrt5(&t, out)
        }
        VerifyArg::Henning { max_n, tsv } => {
            let r = verify_henning(max_n, threads, tsv)?;
            if tsv {
                write_records(&r.records, out);
                return Ok(exit_code(r.all_pass()));
            }
            writeln!(out, "max_n={} trees_checked={}", r.max_n, r.trees_checked).unwrap();
            if let Some((l, g6)) = &r.max_lambda {
                writeln!(out, "max_lambda={l:.8} ln_max_lambda={} tree={g6}", l.ln()).unwrap();
            }
            writeln!(out, "violations={}", r.violations.len()).unwrap();
            for (g6, b) in &r.violations {
                writeln!(out, "violation {g6} {b}").unwrap();
            }
            r.all_pass()
        }
        VerifyArg::Families { max_k, max_klm } => {
            let r = verify_family_formulas(max_k, max_klm)?;
            for row in &r.rows {
                writeln!(
                    out,
                    "{} n={} {}={} count={} closed_form={} {}",
                    row.spec,
                    row.n,
                    size_label(row.closed.mode),
                    row.dp.size,
                    row.dp.count,
                    row.closed.count,
                    if row.matches() { "ok" } else { "MISMATCH" }
                )
                .unwrap();
            }
            r.all_pass()
        }
    };
    writeln!(
        out,
        "result={}",
        if pass { Verdict::Pass } else { Verdict::Fail }
    )
    .unwrap();
    Ok(exit_code(pass))
}

fn exit_code(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

fn sqrt5_passes(t: &MaximizerTable) -> bool {
    t.all_pass() && t.lower_bound_gaps().is_empty()
}

/// Summary lines for a sqrt5 run; returns whether it passed.
fn render_sqrt5(t: &MaximizerTable, out: &mut String) -> bool {
    writeln!(out, "max_n={} trees_checked={}", t.max_n, t.trees_checked).unwrap();
    for row in &t.rows {
        writeln!(
            out,
            "gamma={} max_count={} classes={} witnesses={}",
            row.gamma,
            row.max_count,
            row.classes(),
            row.witnesses.join(",")
        )
        .unwrap();
    }
    writeln!(out, "violations={}", t.violations.len()).unwrap();
    for v in &t.violations {
        writeln!(out, "violation {v}").unwrap();
    }
    writeln!(out, "lower_bound_gaps={}", join(t.lower_bound_gaps())).unwrap();
    sqrt5_passes(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> Outcome {
        let argv = std::iter::once("domcount").chain(args.iter().copied());
        run_with_threads(argv, stdin.as_bytes(), Some("1"))
    }

    #[test]
    fn count_p2() {
        let o = call(&["count", "--mode", "dom"], "2\n0 1\n");
        assert_eq!((o.code, o.stdout.as_str()), (0, "gamma=1 count=2\n"));
    }

    #[test]
    fn generate_then_count() {
        let g = call(&["generate", "gklm", "3", "16", "3"], "");
        assert_eq!(g.code, 0);
        let o = call(&["count", "--mode", "total"], &g.stdout);
        assert_eq!(
            o.stdout,
            "gamma_t=97 count=230609229583958893240020328125\n"
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"], "").code, 2);
        assert_eq!(call(&["count", "--mode", "sideways"], "").code, 2);
        let o = call(&["count", "--mode", "total"], "3\n0 1\n");
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("isolated"), "{}", o.stderr);
        assert_eq!(call(&["count"], "2\n0 1\n1 0\n").code, 2);
        assert_eq!(call(&["help"], "").code, 0);
    }

    #[test]
    fn bad_thread_count() {
        let o = run_with_threads(
            ["domcount", "verify", "sqrt5", "--max-n", "3"],
            b"",
            Some("zero"),
        );
        assert_eq!(o.code, 2);
    }

    #[test]
    fn violations_exit_one() {
        let mut table = verify_sqrt5(4, 1, false).unwrap();
        table.violations.push("Bw".into());
        let mut out = String::new();
        assert!(!render_sqrt5(&table, &mut out));
        assert!(out.contains("violation Bw"));
        assert_eq!(exit_code(sqrt5_passes(&table)), 1);
        table.violations.clear();
        table.max_n = 7;
        table.rows.retain(|r| r.gamma != 3);
        assert_eq!(table.lower_bound_gaps(), vec![1]);
        assert_eq!(exit_code(sqrt5_passes(&table)), 1);
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..4").unwrap(), 1..=4);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert_eq!(parse_range("2..=5").unwrap(), 2..=5);
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("a..1").is_err());
    }

    #[test]
    fn enumerate_p5() {
        let o = call(&["enumerate"], "5\n0 1\n1 2\n2 3\n3 4\n");
        assert_eq!(o.stdout, "0 3\n1 3\n1 4\n");
        assert_eq!(
            call(&["enumerate", "--limit", "2"], "5\n0 1\n1 2\n2 3\n3 4\n").code,
            2
        );
    }
}
