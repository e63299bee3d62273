//! The `annih` command line: Gröbner bases, minimal polynomials, complexity
//! profiles, construction traces and oracle verification for sequences over
//! prime fields or the rationals.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use annih_core::engine::run_state;
use annih_core::formats::{BasisJson, InverseFormJson, MinPolyJson, TraceRowJson};
use annih_core::oracle::verify_sequence;
use annih_core::{
    from_sequence, minimal_polynomial, run as run_engine, EngineOptions, Error, FieldSpec, Form,
    Sequence, TraceRow, VerificationReport,
};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "annih",
    version,
    about = "Annihilator ideals and minimal polynomials of sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gb,
    Minpoly,
    Profile,
    Verify,
    Trace,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gröbner basis of the annihilator ideal
    Gb(Common),
    /// Minimal polynomial and linear complexity
    Minpoly(Common),
    /// Linear complexity of every prefix
    Profile(Common),
    /// Run every oracle check on the input
    Verify(Common),
    /// The construction step by step
    Trace(Common),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Coefficient field: gf<p> for a prime p, or q
    #[arg(long, value_parser = parse_field)]
    pub field: FieldSpec,
    /// Comma-separated sequence, e.g. 1,0,0,1
    #[arg(long, conflicts_with_all = ["file", "form"])]
    pub seq: Option<String>,
    /// File with one sequence per line
    #[arg(long, conflicts_with = "form")]
    pub file: Option<PathBuf>,
    /// JSON file holding an inverse form {"m", "coeffs"} or an array of them
    #[arg(long)]
    pub form: Option<PathBuf>,
    /// Keep the basis reduced
    #[arg(long)]
    pub reduced: bool,
    /// Emit JSON
    #[arg(long)]
    pub json: bool,
    /// Seed for a random input when no input is given
    #[arg(long)]
    pub seed: Option<u64>,
}

impl Command {
    pub fn kind(&self) -> CommandKind {
        match self {
            Command::Gb(_) => CommandKind::Gb,
            Command::Minpoly(_) => CommandKind::Minpoly,
            Command::Profile(_) => CommandKind::Profile,
            Command::Verify(_) => CommandKind::Verify,
            Command::Trace(_) => CommandKind::Trace,
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::Gb(c)
            | Command::Minpoly(c)
            | Command::Profile(c)
            | Command::Verify(c)
            | Command::Trace(c) => c,
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

/// Parses `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(argv)
}

/// Where the inputs came from: a single inline or generated sequence, or a
/// batch (file, stdin, array of forms).
struct Inputs {
    items: Vec<Result<Sequence, Error>>,
    batch: bool,
}

fn random_sequence(field: FieldSpec, seed: u64) -> Sequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=16);
    let mut vals: Vec<i64> = match field.order() {
        Some(p) => (0..n).map(|_| rng.gen_range(0..p as i64)).collect(),
        None => (0..n).map(|_| rng.gen_range(-5..=5)).collect(),
    };
    if vals.iter().all(|&v| v == 0) {
        vals[n - 1] = 1;
    }
    Sequence::from_i64s(field, &vals).expect("nonempty")
}

fn read_inputs(c: &Common, stdin: &mut dyn Read) -> Result<Inputs, String> {
    if let Some(s) = &c.seq {
        return Ok(Inputs {
            items: vec![Sequence::parse(c.field, s)],
            batch: false,
        });
    }
    if let Some(path) = &c.form {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let value: Value =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let (list, batch) = match value {
            Value::Array(v) => (v, true),
            other => (vec![other], false),
        };
        let items = list
            .into_iter()
            .map(|v| {
                let j: InverseFormJson =
                    serde_json::from_value(v).map_err(|e| Error::Malformed(e.to_string()))?;
                Ok(j.to_inverse_form(c.field)?.to_sequence())
            })
            .collect();
        return Ok(Inputs { items, batch });
    }
    let text = if let Some(path) = &c.file {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    } else if let Some(seed) = c.seed {
        return Ok(Inputs {
            items: vec![Ok(random_sequence(c.field, seed))],
            batch: false,
        });
    } else {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        buf
    };
    let items = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| Sequence::parse(c.field, l))
        .collect();
    Ok(Inputs { items, batch: true })
}

/// Rendered result for one input plus its exit status.
struct Outcome {
    text: String,
    json: Value,
    code: i32,
}

fn tuple<T: ToString>(items: &[T]) -> String {
    let inner: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(","))
}

fn basis_tuple(basis: &[Form]) -> String {
    tuple(&basis.iter().map(Form::display_factored).collect::<Vec<_>>())
}

fn joined(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

struct Palette {
    on: bool,
}

impl Palette {
    fn paint(&self, code: &str, s: &str) -> String {
        if self.on {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }
}

fn trace_table(rows: &[TraceRow], palette: &Palette) -> String {
    let cells: Vec<(String, String, String)> = rows
        .iter()
        .map(|r| {
            (
                r.m.to_string(),
                basis_tuple(&r.basis),
                tuple(&r.degree_tuple),
            )
        })
        .collect();
    let w0 = cells.iter().map(|c| c.0.len()).max().unwrap_or(0).max(1);
    let w1 = cells.iter().map(|c| c.1.len()).max().unwrap_or(0).max(1);
    let w2 = cells.iter().map(|c| c.2.len()).max().unwrap_or(0).max(1);
    let mut out = String::new();
    let header = format!("{:>w0$} | {:<w1$} | {:<w2$}", "m", "F", "D");
    out.push_str(palette.paint("1", header.trim_end()).as_str());
    out.push('\n');
    out.push_str(&format!(
        "{}-+-{}-+-{}\n",
        "-".repeat(w0),
        "-".repeat(w1),
        "-".repeat(w2)
    ));
    for (m, f, d) in cells {
        let line = format!(
            "{} | {:<w1$} | {}",
            palette.paint("36", &format!("{m:>w0$}")),
            f,
            d
        );
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn domain_error(e: &Error) -> bool {
    matches!(e, Error::AllZeroSequence | Error::ZeroForm)
}

fn failure(e: Error) -> Outcome {
    let code = if domain_error(&e) {
        EXIT_DOMAIN
    } else {
        EXIT_USAGE
    };
    Outcome {
        text: format!("error: {e}\n"),
        json: serde_json::json!({ "error": e.to_string() }),
        code,
    }
}

fn report_text(r: &VerificationReport, palette: &Palette) -> String {
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in &r.checks {
        let tag = if c.passed {
            palette.paint("32", "PASS")
        } else {
            palette.paint("31", "FAIL")
        };
        out.push_str(&format!("{tag} {:<width$}  {}\n", c.name, c.detail));
    }
    out.push_str(if r.passed {
        "verified\n"
    } else {
        "verification failed\n"
    });
    out
}

fn execute(
    kind: CommandKind,
    c: &Common,
    s: &Sequence,
    palette: &Palette,
) -> Result<Outcome, Error> {
    let opts = EngineOptions {
        reduced: c.reduced,
        ..Default::default()
    };
    Ok(match kind {
        CommandKind::Gb => {
            let b = run_engine(&from_sequence(s)?, opts)?;
            let text = format!(
                "F = {}\nD = {}\nlambda = {}\ndim = {}\nmu1 = {}\n",
                basis_tuple(&b.basis),
                tuple(&b.dtuple),
                b.lambda,
                b.dim,
                b.min_poly()
            );
            Outcome {
                text,
                json: serde_json::to_value(BasisJson::from(&b)).expect("serialisable"),
                code: EXIT_OK,
            }
        }
        CommandKind::Minpoly => {
            let r = minimal_polynomial(s);
            let mut text = format!("mu1 = {}\nlc = {}\n", r.mu1, r.lc);
            if r.degenerate {
                text.push_str("degenerate = true\n");
            }
            Outcome {
                text,
                json: serde_json::to_value(MinPolyJson::new(s.field(), &r)).expect("serialisable"),
                code: EXIT_OK,
            }
        }
        CommandKind::Profile => {
            let r = minimal_polynomial(s);
            Outcome {
                text: format!("{}\n", joined(&r.profile)),
                json: serde_json::to_value(&r.profile).expect("serialisable"),
                code: EXIT_OK,
            }
        }
        CommandKind::Trace => {
            let state = run_state(
                &from_sequence(s)?,
                EngineOptions {
                    trace: true,
                    ..opts
                },
            )?;
            let rows = state.trace().expect("trace requested");
            let json: Vec<TraceRowJson> = rows.iter().map(TraceRowJson::from).collect();
            Outcome {
                text: trace_table(rows, palette),
                json: serde_json::to_value(json).expect("serialisable"),
                code: EXIT_OK,
            }
        }
        CommandKind::Verify => {
            let r = verify_sequence(s)?;
            Outcome {
                text: report_text(&r, palette),
                json: serde_json::to_value(&r).expect("serialisable"),
                code: if r.passed {
                    EXIT_OK
                } else {
                    EXIT_VERIFY_FAILED
                },
            }
        }
    })
}

/// Runs the command line with colour taken from `ANNIH_COLOR`.
pub fn run(argv: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let color = std::env::var("ANNIH_COLOR").is_ok_and(|v| v == "1");
    run_with_color(argv, stdin, out, err, color)
}

pub fn run_with_color(
    argv: &[String],
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
    color: bool,
) -> i32 {
    let cli = match parse_args(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let kind = cli.command.kind();
    let common = cli.command.common();
    let inputs = match read_inputs(common, stdin) {
        Ok(i) => i,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let palette = Palette { on: color };
    let outcomes: Vec<Outcome> = inputs
        .items
        .into_par_iter()
        .map(|item| match item {
            Ok(s) => execute(kind, common, &s, &palette).unwrap_or_else(failure),
            Err(e) => failure(e),
        })
        .collect();

    let code = outcomes.iter().map(|o| o.code).max().unwrap_or(EXIT_OK);
    let written = if common.json {
        let value = if inputs.batch {
            Value::Array(outcomes.iter().map(|o| o.json.clone()).collect())
        } else {
            outcomes
                .first()
                .map(|o| o.json.clone())
                .unwrap_or(Value::Null)
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string(&value).expect("serialisable")
        )
    } else {
        let mut res = Ok(());
        for (i, o) in outcomes.iter().enumerate() {
            if i > 0 {
                res = res.and_then(|_| writeln!(out));
            }
            if o.code == EXIT_USAGE || o.code == EXIT_DOMAIN {
                let _ = write!(err, "{}", o.text);
            } else {
                res = res.and_then(|_| write!(out, "{}", o.text));
            }
        }
        res
    };
    if written.is_err() {
        return EXIT_USAGE;
    }
    code
}
