//! `monocat`: command-line front end for fusion data and module-category fixtures.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or an object
//! is rejected, 2 when input cannot be read or parsed.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monocat_core::expr::ObjectExpr;
use monocat_core::fixtures::{self, CheckSet, Fixture, FixtureEntry, FixtureError, FixtureKind};
use monocat_core::fusion::{FusionData, FusionError};
use monocat_core::report::{CheckKind, CoherenceReport};

const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "monocat", version, about = "Exact checks for monoidal embeddings into bimodule categories")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized sampling; echoed in every report.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate fusion data: unit laws, associativity, reciprocity, duals.
    Validate {
        /// Fusion data file, or the name of a bundled fixture.
        input: String,
    },
    /// Print the block-matrix image of an object.
    Embed {
        input: String,
        /// Object expression such as `tau`, `1+tau`, `(sigma*sigma)^2`.
        object: String,
    },
    /// Tabulate dim End(X^n) against the growth bound d^(2n).
    Bound {
        input: String,
        object: String,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=64))]
        n_max: u32,
    },
    /// Run the reconstruction checks on a module-category fixture.
    Watts {
        input: String,
        /// `all`, or a comma-separated subset of axioms, T, functor, embedding, rigidity.
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Run every check on the given fixtures (all bundled ones by default)
    /// and compare with the expected outcome; bundled mutants must fail.
    Report {
        inputs: Vec<String>,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=64))]
        n_max: u32,
    },
}

/// What a command produced: a JSON body, a text rendering and an exit code.
struct Outcome {
    body: Value,
    text: String,
    code: u8,
}

#[derive(Debug)]
enum CliError {
    /// Unreadable or malformed input.
    Input(String),
    /// Well-formed input that a command rejects.
    Rejected(String),
}

impl From<FixtureError> for CliError {
    fn from(e: FixtureError) -> Self {
        match e {
            FixtureError::Watts(_) | FixtureError::Fusion(_) => CliError::Rejected(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<FusionError> for CliError {
    fn from(e: FusionError) -> Self {
        match e {
            FusionError::Parse(_) => CliError::Input(e.to_string()),
            other => CliError::Rejected(other.to_string()),
        }
    }
}

fn load(input: &str) -> Result<(PathBuf, Fixture), CliError> {
    let path = fixtures::resolve(input)?;
    let fixture = fixtures::load_path(&path)?;
    Ok((path, fixture))
}

fn load_fusion(input: &str) -> Result<FusionData, CliError> {
    match load(input)?.1 {
        Fixture::Fusion(fd) => Ok(fd),
        Fixture::Watts(_) => Err(CliError::Input(format!("{input} holds a module category, not fusion data"))),
    }
}

fn code(passed: bool) -> u8 {
    if passed {
        0
    } else {
        1
    }
}

fn report_outcome(report: &CoherenceReport) -> Outcome {
    Outcome { body: json!({ "passed": report.passed(), "report": report.to_json() }), text: report.to_string(), code: code(report.passed()) }
}

/// Rejects fusion data that fails validation before it is used.
fn require_valid(fd: &FusionData) -> Result<(), Outcome> {
    let report = fd.validate();
    if report.passed() {
        Ok(())
    } else {
        let mut o = report_outcome(&report);
        o.text = format!("fusion data is invalid\n{}", o.text);
        Err(o)
    }
}

fn validate(input: &str) -> Result<Outcome, CliError> {
    Ok(report_outcome(&load_fusion(input)?.validate()))
}

fn embed(input: &str, object: &str) -> Result<Outcome, CliError> {
    let fd = load_fusion(input)?;
    if let Err(o) = require_valid(&fd) {
        return Ok(o);
    }
    let x = ObjectExpr::parse(object)?.evaluate(&fd)?;
    let v = fd.embed_object(&x)?;
    let text = format!("embed({}) = {}\n{v}", object, fd.format_object(&x));
    Ok(Outcome { body: json!({ "object": object, "expanded": fd.format_object(&x), "matrix": v.to_json() }), text, code: 0 })
}

fn bound(input: &str, object: &str, n_max: u32) -> Result<Outcome, CliError> {
    let fd = load_fusion(input)?;
    if let Err(o) = require_valid(&fd) {
        return Ok(o);
    }
    let x = ObjectExpr::parse(object)?.evaluate(&fd)?;
    let (report, rows) = fd.check_growth_bound(&x, n_max)?;
    let mut text = format!("X = {}, d = {}\n{:>4} {:>24} {:>24}\n", fd.format_object(&x), report.data["d"], "n", "dim End(X^n)", "bound");
    for r in &rows {
        writeln!(text, "{:>4} {:>24} {:>24}", r.n, r.end_dim, r.bound).expect("write to string");
    }
    text.push_str(&report.to_string());
    Ok(Outcome {
        body: json!({ "object": object, "n_max": n_max, "passed": report.passed(), "rows": rows, "report": report.to_json() }),
        text,
        code: code(report.passed()),
    })
}

fn watts(input: &str, checks: &str, seed: u64) -> Result<Outcome, CliError> {
    let checks: CheckSet = checks.parse().map_err(|e: FixtureError| CliError::Input(e.to_string()))?;
    match load(input)?.1 {
        Fixture::Watts(w) => Ok(report_outcome(&w.run(&checks, seed))),
        Fixture::Fusion(_) => Err(CliError::Input(format!("{input} holds fusion data, not a module category"))),
    }
}

/// Full run on one fixture: validation plus growth tables for fusion data,
/// every check group for module categories.
fn full_report(entry: &FixtureEntry, n_max: u32, seed: u64) -> Result<CoherenceReport, CliError> {
    Ok(match fixtures::load_path(&entry.path)? {
        Fixture::Fusion(fd) => {
            let mut rep = fd.validate();
            if rep.passed() {
                for i in 0..fd.rank() {
                    let (r, _) = fd.check_growth_bound(&fd.simple(i), n_max)?;
                    rep.merge(r.with_prefix(&format!("growth[{}]/", fd.simples()[i])));
                }
            }
            rep
        }
        Fixture::Watts(w) => w.run(&CheckSet::all(), seed),
    })
}

fn report(inputs: &[String], n_max: u32, seed: u64) -> Result<Outcome, CliError> {
    let entries = if inputs.is_empty() {
        fixtures::bundled_fixtures()?
    } else {
        let mut out = Vec::new();
        for input in inputs {
            let path = fixtures::resolve(input)?;
            let kind = fixtures::kind_of(&std::fs::read_to_string(&path).map_err(|e| CliError::Input(e.to_string()))?)?;
            let bundled = fixtures::bundled_fixtures()?.into_iter().find(|e| e.path == path);
            out.push(bundled.unwrap_or(FixtureEntry { name: input.clone(), path, kind, mutant: false }));
        }
        out
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut all_ok = true;
    for e in &entries {
        let (passed, failing, error) = match full_report(e, n_max, seed) {
            Ok(r) => {
                let failing: Vec<String> = r.checks().filter(|c| !c.passed() && c.kind == CheckKind::Required).map(|c| c.name.clone()).collect();
                (r.passed(), failing, None)
            }
            Err(CliError::Input(m)) => return Err(CliError::Input(format!("{}: {m}", e.name))),
            Err(CliError::Rejected(m)) => (false, Vec::new(), Some(m)),
        };
        let as_expected = passed != e.mutant;
        all_ok &= as_expected;
        let kind = match e.kind {
            FixtureKind::Fusion => "fusion",
            FixtureKind::Watts => "watts",
        };
        let expected = if e.mutant { "fail" } else { "pass" };
        let got = if passed { "pass" } else { "fail" };
        let mark = if as_expected { "ok" } else { "UNEXPECTED" };
        writeln!(text, "{:<36} {:<7} expected {expected:<5} got {got:<5} {mark}", e.name, kind).expect("write to string");
        if !failing.is_empty() {
            writeln!(text, "    failing: {}", failing.join(", ")).expect("write to string");
        }
        if let Some(m) = &error {
            writeln!(text, "    error: {m}").expect("write to string");
        }
        rows.push(json!({
            "name": e.name,
            "kind": kind,
            "expected": expected,
            "passed": passed,
            "as_expected": as_expected,
            "failing": failing,
            "error": error,
        }));
    }
    Ok(Outcome { body: json!({ "passed": all_ok, "n_max": n_max, "fixtures": rows }), text, code: code(all_ok) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, input) = match &cli.command {
        Command::Validate { input } => ("validate", Some(input.clone())),
        Command::Embed { input, .. } => ("embed", Some(input.clone())),
        Command::Bound { input, .. } => ("bound", Some(input.clone())),
        Command::Watts { input, .. } => ("watts", Some(input.clone())),
        Command::Report { .. } => ("report", None),
    };
    let result = match &cli.command {
        Command::Validate { input } => validate(input),
        Command::Embed { input, object } => embed(input, object),
        Command::Bound { input, object, n_max } => bound(input, object, *n_max),
        Command::Watts { input, checks } => watts(input, checks, cli.seed),
        Command::Report { inputs, n_max } => report(inputs, *n_max, cli.seed),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(CliError::Rejected(m)) => Outcome { body: json!({ "passed": false, "error": m }), text: format!("error: {m}\n"), code: 1 },
        Err(CliError::Input(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        Format::Json => {
            let mut envelope = json!({ "schema": SCHEMA, "command": name, "seed": cli.seed });
            if let Some(i) = input {
                envelope["input"] = json!(i);
            }
            if let (Value::Object(env), Value::Object(body)) = (&mut envelope, outcome.body) {
                env.extend(body);
            }
            format!("{}\n", serde_json::to_string_pretty(&envelope).expect("serializable"))
        }
        Format::Text => format!("{}seed: {}\n", outcome.text, cli.seed),
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
    ExitCode::from(outcome.code)
}
