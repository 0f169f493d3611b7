//! `sixlines`: exact computations on six-line configurations, with JSON
//! reports.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 for
//! malformed input, 3 for a violated precondition.

mod commands;
mod input;
mod json;

use clap::{Args, Parser, Subcommand};
use input::{params_from_tokens, parse_json_request, rational_token, Request, Source};
use serde_json::{json, Value};
use sixlines_core::CoreError;
use std::io::{IsTerminal, Read};
use std::path::PathBuf;
use std::process::ExitCode;

pub const SCHEMA: &str = "sixlines-report/1";

#[derive(Debug)]
pub enum CliError {
    Malformed(String),
    Precondition(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Malformed(_) => "malformed-input",
            CliError::Precondition(_) => "precondition",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Malformed(m) | CliError::Precondition(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(name = "sixlines", version, about = "Invariants, K3 fibrations and two-isogenies of six-line configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coordinates, J-invariants, Satake sextic and stratum flags.
    Invariants(Opts),
    /// Degeneration stratum of a configuration.
    Classify(Opts),
    /// Weierstrass models and their singular fibers.
    Fibration(Opts),
    /// Two-isogeny identities; `--verify` runs the symbolic suite.
    Isogeny {
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// Tangent configuration of a Rosenhain curve and the Igusa–Clebsch comparison.
    Tangent(Opts),
    /// Every verification routine.
    VerifyAll(Opts),
    /// Quartic parameters solved from a configuration.
    Params {
        /// Accepted for symmetry with the input flags; parameters always come from a configuration.
        #[arg(long)]
        from_config: bool,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args, Clone, Default)]
struct Opts {
    /// JSON request file, `-` for standard input.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, num_args = 4, value_names = ["A", "B", "C", "D"], allow_negative_numbers = true)]
    moduli: Option<Vec<String>>,
    #[arg(long, num_args = 3, value_names = ["L1", "L2", "L3"], allow_negative_numbers = true)]
    rosenhain: Option<Vec<String>>,
    /// α β γ δ ε ζ; with --radicand D a value may be written `p/q:r/s` for p/q + (r/s)√D.
    #[arg(long, num_args = 6, value_name = "Q", allow_negative_numbers = true, allow_hyphen_values = true)]
    params: Option<Vec<String>>,
    #[arg(long, allow_negative_numbers = true)]
    radicand: Option<i64>,
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

fn fixed<const N: usize>(v: &[String]) -> Result<[sixlines_algebra::Rational; N], CliError> {
    let parsed: Vec<_> = v.iter().map(|s| rational_token(s)).collect::<Result<_, _>>()?;
    parsed.try_into().map_err(|_| CliError::Malformed(format!("expected {N} values")))
}

fn read_text(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Malformed(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Malformed(format!("reading {}: {e}", path.display())))
}

fn build_request(o: &Opts) -> Result<Request, CliError> {
    let mut flag_sources = Vec::new();
    if let Some(m) = &o.moduli {
        flag_sources.push(Source::Moduli(fixed::<4>(m)?));
    }
    if let Some(r) = &o.rosenhain {
        flag_sources.push(Source::Rosenhain(fixed::<3>(r)?));
    }
    if let Some(p) = &o.params {
        flag_sources.push(Source::Params(params_from_tokens(p, o.radicand)?));
    } else if o.radicand.is_some() {
        return Err(CliError::Malformed("--radicand is only meaningful with --params".into()));
    }
    let mut req = match &o.input {
        Some(path) => parse_json_request(&read_text(path)?)?,
        None if flag_sources.is_empty() && !std::io::stdin().is_terminal() => {
            let text = read_text(&PathBuf::from("-"))?;
            if text.trim().is_empty() {
                Request::default()
            } else {
                parse_json_request(&text)?
            }
        }
        None => Request::default(),
    };
    if flag_sources.len() + usize::from(req.source.is_some()) > 1 {
        return Err(CliError::Malformed("exactly one input source is allowed".into()));
    }
    if let Some(s) = flag_sources.pop() {
        req.source = Some(s);
    }
    req.model = o.model.clone().or(req.model);
    req.seed = o.seed.or(req.seed);
    req.samples = o.samples.or(req.samples);
    Ok(req)
}

fn options_json(req: &Request) -> Value {
    json!({ "model": req.model, "seed": req.seed, "samples": req.samples })
}

fn emit(report: &Value, output: Option<&PathBuf>) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
    text.push('\n');
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, opts, verify) = match &cli.command {
        Command::Invariants(o) => ("invariants", o, false),
        Command::Classify(o) => ("classify", o, false),
        Command::Fibration(o) => ("fibration", o, false),
        Command::Isogeny { verify, opts } => ("isogeny", opts, *verify),
        Command::Tangent(o) => ("tangent", o, false),
        Command::VerifyAll(o) => ("verify-all", o, false),
        Command::Params { opts, .. } => ("params", opts, false),
    };
    let outcome = build_request(opts).and_then(|req| {
        let results = match name {
            "invariants" => commands::invariants(&req),
            "classify" => commands::classify(&req),
            "fibration" => commands::fibration(&req),
            "isogeny" => commands::isogeny(&req, verify),
            "tangent" => commands::tangent(&req),
            "verify-all" => commands::verify_all(&req),
            "params" => commands::params(&req),
            _ => unreachable!("every subcommand is dispatched"),
        }?;
        Ok((req, results))
    });
    let (report, code) = match outcome {
        Ok((req, results)) => {
            let failed = results.failed();
            let report = json!({
                "schema": SCHEMA,
                "command": name,
                "input": req.source.as_ref().map_or(Value::Null, Source::echo),
                "options": options_json(&req),
                "results": results.into_value(),
                "status": if failed { "fail" } else { "pass" },
            });
            (report, u8::from(failed))
        }
        Err(e) => {
            eprintln!("sixlines {name}: {}: {}", e.kind(), e.message());
            let report = json!({
                "schema": SCHEMA,
                "command": name,
                "status": "error",
                "error": { "kind": e.kind(), "message": e.message() },
            });
            (report, e.code())
        }
    };
    if let Err(msg) = emit(&report, opts.output.as_ref()) {
        eprintln!("sixlines {name}: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
