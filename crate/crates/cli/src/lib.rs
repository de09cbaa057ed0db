//! The `ipf` command line: batch evaluation, order and congruence queries,
//! equation solving and the property suites.
//!
//! Output is plain text by default and a versioned JSON document with
//! `--json` (schema [`SCHEMA`]). Exit codes: 0 on success, 1 when `check`
//! finds a failing criterion, 2 on usage, parse or engine errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use ipf_core::congruence::{congruence_from_pair_with_cap, CongruenceDescriptor};
use ipf_core::element::enumerate_units_with_cap;
use ipf_core::suites::{run_suite, Suite, SuiteConfig, DEFAULT_SEED};
use ipf_core::words::literal_dim;
use ipf_core::{
    evaluate, mg_related, parse, psi, solve_left, solve_right, top_of_class, upsilon, Expr,
    IpfElement, IpfError, DEFAULT_MAX_DIM,
};

pub const SCHEMA: &str = "ipf-cli/1";

/// Environment variable overriding the dimension cap.
pub const MAX_DIM_VAR: &str = "IPF_MAX_DIM";

#[derive(Parser, Debug)]
#[command(name = "ipf", version, about = "Calculator for order isomorphisms between principal filters of N^n")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Dimension n; inferred from literals when omitted.
    #[arg(short = 'n', long = "n", global = true, value_name = "N")]
    n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression to canonical form.
    Eval { expr: String },
    /// Natural order both ways, least group congruence and Green's relations.
    Order { a: String, b: String },
    /// Images in the group quotient and the semidirect product, and the top of the class.
    Quotient { a: String },
    /// Congruence generated by the pair (A, B).
    Congruence {
        a: String,
        b: String,
        /// Also test whether C and D are related.
        #[arg(long, num_args = 2, value_names = ["C", "D"])]
        test: Option<Vec<String>>,
    },
    /// Solve X*A = B (--left) or A*X = B (--right).
    Solve(SolveArgs),
    /// List the group of units in dimension N.
    Units { count: usize },
    /// Run the property suites.
    Check {
        #[arg(long, default_value_t = 3)]
        max: i64,
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("side").required(true).args(["left", "right"])))]
struct SolveArgs {
    #[arg(long)]
    left: bool,
    #[arg(long)]
    right: bool,
    a: String,
    b: String,
}

#[derive(Debug)]
enum CliError {
    Engine(IpfError),
    Usage(String),
}

impl From<IpfError> for CliError {
    fn from(e: IpfError) -> Self {
        CliError::Engine(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a subcommand produced: text lines, a JSON result and an exit code.
struct Outcome {
    text: String,
    json: Value,
    code: i32,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, code: 0 }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let cap = match max_dim() {
        Ok(cap) => cap,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let command = command_name(&cli.command);
    match dispatch(&cli, cap) {
        Ok(outcome) => {
            let written = if cli.json {
                let doc = json!({ "schema": SCHEMA, "command": command, "result": outcome.json });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json values serialize"))
            } else {
                write!(out, "{}", outcome.text)
            };
            if written.is_err() {
                return 2;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn max_dim() -> CliResult<usize> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_DIM_VAR} must be a non-negative integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::Order { .. } => "order",
        Command::Quotient { .. } => "quotient",
        Command::Congruence { .. } => "congruence",
        Command::Solve(_) => "solve",
        Command::Units { .. } => "units",
        Command::Check { .. } => "check",
    }
}

/// Reads `@path` arguments from disk; anything else is the expression.
fn load(arg: &str) -> CliResult<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

/// Parses the arguments and evaluates them in a common dimension.
fn elements(cli: &Cli, cap: usize, args: &[&str]) -> CliResult<Vec<IpfElement>> {
    let exprs: Vec<Expr> = args
        .iter()
        .map(|a| Ok(parse(&load(a)?)?))
        .collect::<CliResult<_>>()?;
    let n = match cli.n.or_else(|| exprs.iter().find_map(literal_dim)) {
        Some(n) => n,
        None => {
            return Err(CliError::Usage(
                "cannot infer the dimension from the expression; pass -n".into(),
            ))
        }
    };
    check_dim(n, cap)?;
    Ok(exprs.iter().map(|e| evaluate(e, n)).collect::<Result<_, _>>()?)
}

fn check_dim(n: usize, cap: usize) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Usage("dimension must be at least 1".into()));
    }
    if n > cap {
        return Err(IpfError::CapExceeded { n, cap }.into());
    }
    Ok(())
}

fn element_json(a: &IpfElement) -> Value {
    json!({
        "text": a.to_string(),
        "n": a.dim(),
        "s": a.sigma().one_line(),
        "x": a.x().coords(),
        "y": a.y().coords(),
    })
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string() + "\n").collect()
}

fn dispatch(cli: &Cli, cap: usize) -> CliResult<Outcome> {
    match &cli.command {
        Command::Eval { expr } => {
            let a = elements(cli, cap, &[expr])?.remove(0);
            Ok(Outcome::ok(format!("{a}\n"), element_json(&a)))
        }
        Command::Order { a, b } => {
            let v = elements(cli, cap, &[a, b])?;
            let (a, b) = (&v[0], &v[1]);
            let ab = a.natural_leq(b)?;
            let ba = b.natural_leq(a)?;
            let mg = mg_related(a, b)?;
            let g = a.green_relations(b)?;
            let text = format!(
                "a<=b: {ab}\nb<=a: {ba}\nmg_related: {mg}\ngreen: L={} R={} H={} D={} J={}\n",
                g.l, g.r, g.h, g.d, g.j
            );
            let json = json!({
                "a": element_json(a),
                "b": element_json(b),
                "a_leq_b": ab,
                "b_leq_a": ba,
                "mg_related": mg,
                "green": { "L": g.l, "R": g.r, "H": g.h, "D": g.d, "J": g.j },
            });
            Ok(Outcome::ok(text, json))
        }
        Command::Quotient { a } => {
            let a = elements(cli, cap, &[a])?.remove(0);
            let u = upsilon(&a)?;
            let p = psi(&a);
            let top = top_of_class(&a);
            let text = format!("upsilon: {u}\npsi: {p}\ntop: {top}\n");
            let json = json!({
                "element": element_json(&a),
                "upsilon": { "text": u.to_string(), "s": u.sigma.one_line(), "z": u.z },
                "psi": {
                    "text": p.to_string(),
                    "s": p.sigma.one_line(),
                    "pairs": p.pairs.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
                },
                "top": element_json(&top),
            });
            Ok(Outcome::ok(text, json))
        }
        Command::Congruence { a, b, test } => {
            let mut refs: Vec<&str> = vec![a, b];
            if let Some(t) = test {
                refs.extend(t.iter().map(String::as_str));
            }
            let v = elements(cli, cap, &refs)?;
            let desc = congruence_from_pair_with_cap(&v[0], &v[1], cap)?;
            let mut text = format!("{desc}\n");
            let mut json = descriptor_json(&desc);
            if test.is_some() {
                let related = desc.relates(&v[2], &v[3])?;
                text.push_str(&format!("relates: {related}\n"));
                json["relates"] = json!(related);
            }
            Ok(Outcome::ok(text, json))
        }
        Command::Solve(s) => {
            let v = elements(cli, cap, &[&s.a, &s.b])?;
            let (side, sols) = if s.left {
                ("left", solve_left(&v[0], &v[1])?)
            } else {
                ("right", solve_right(&v[0], &v[1])?)
            };
            let json = json!({
                "side": side,
                "count": sols.len(),
                "solutions": sols.iter().map(element_json).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(lines(&sols), json))
        }
        Command::Units { count } => {
            let units = enumerate_units_with_cap(*count, cap)?;
            let json = json!({
                "n": count,
                "count": units.len(),
                "units": units.iter().map(element_json).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(lines(&units), json))
        }
        Command::Check { max, suite, seed } => {
            let suite: Suite = suite.parse()?;
            let cfg = SuiteConfig {
                n: cli.n.unwrap_or(2),
                max: *max,
                seed: *seed,
            };
            check_dim(cfg.n, cap)?;
            let reports = run_suite(suite, &cfg)?;
            let passed = reports.iter().filter(|r| r.passed).count();
            let mut text = lines(&reports);
            text.push_str(&format!("{passed}/{} criteria passed\n", reports.len()));
            let json = json!({
                "suite": suite.name(),
                "n": cfg.n,
                "max": cfg.max,
                "seed": cfg.seed,
                "passed": passed == reports.len(),
                "criteria": reports.iter().map(|r| json!({
                    "id": r.id,
                    "title": r.title,
                    "passed": r.passed,
                    "cases": r.cases,
                    "detail": r.detail,
                })).collect::<Vec<_>>(),
            });
            let code = if passed == reports.len() { 0 } else { 1 };
            Ok(Outcome { text, json, code })
        }
    }
}

fn descriptor_json(desc: &CongruenceDescriptor) -> Value {
    match desc {
        CongruenceDescriptor::Identity { n } => json!({ "text": desc.to_string(), "kind": "identity", "n": n }),
        CongruenceDescriptor::Group(g) => json!({
            "text": desc.to_string(),
            "kind": "group",
            "n": g.dim(),
            "perms": g.perm_part().map(|p| p.one_line()).collect::<Vec<_>>(),
            "reps": g.reps().values().collect::<Vec<_>>(),
            "lattice": g.lattice().rows(),
        }),
    }
}
