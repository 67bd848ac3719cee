//! The `softdecide` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable, malformed or
//! invalid input (including unknown grades and unwritable output),
//! 3 a cell that the chosen method cannot use.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::decision::{decide, Criterion, DecideOptions, DecisionError, Method};
use crate::io::{parse_scale, parse_table_document, ReportDocument, TableDocument};
use crate::neutrosophic::DEFAULT_EPSILON;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "softdecide", version, about = "Soft-set decision making over candidate tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score every candidate of a table and report the winners.
    Decide(DecideArgs),
}

#[derive(Debug, clap::Args)]
struct DecideArgs {
    /// Decision table (comma-separated).
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Grade scale file for the grey method [default: A-F scale]
    #[arg(long, value_name = "PATH")]
    scale: Option<PathBuf>,
    /// Ranking criterion for the neutrosophic method [default: combined]
    #[arg(long, value_enum)]
    criterion: Option<CriterionArg>,
    /// Tie tolerance when comparing scores.
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Binary,
    Grey,
    Neutrosophic,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Binary => Method::Binary,
            MethodArg::Grey => Method::Grey,
            MethodArg::Neutrosophic => Method::Neutrosophic,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CriterionArg {
    Optimistic,
    Conservative,
    Combined,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Self {
        match c {
            CriterionArg::Optimistic => Criterion::Optimistic,
            CriterionArg::Conservative => Criterion::Conservative,
            CriterionArg::Combined => Criterion::Combined,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: cannot read: {e}", path.display())))
}

fn decision_failure(path: &Path, doc: &TableDocument, err: DecisionError) -> Failure {
    let located = |code, row, col| {
        let (line, column) = doc.position(row, col).unwrap_or((0, 0));
        Failure::new(
            code,
            format!("{}:{line}:{column}: {err}", path.display()),
        )
    };
    match &err {
        DecisionError::CellMismatch { location, .. } => {
            located(EXIT_MISMATCH, location.row, location.col)
        }
        DecisionError::UnknownGrade { location, .. } => located(EXIT_INPUT, location.row, location.col),
        DecisionError::InvalidOptions(_) => Failure::new(EXIT_USAGE, err.to_string()),
        DecisionError::Neutrosophic(_) => {
            Failure::new(EXIT_INPUT, format!("{}: {err}", path.display()))
        }
    }
}

fn run_decide(args: DecideArgs) -> Result<(String, Option<PathBuf>), Failure> {
    let method = Method::from(args.method);
    if args.scale.is_some() && method != Method::Grey {
        return Err(Failure::new(EXIT_USAGE, "--scale only applies to --method grey"));
    }
    if args.criterion.is_some() && method != Method::Neutrosophic {
        return Err(Failure::new(
            EXIT_USAGE,
            "--criterion only applies to --method neutrosophic",
        ));
    }
    if !(args.epsilon.is_finite() && args.epsilon > 0.0) {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("--epsilon must be a positive number, got {}", args.epsilon),
        ));
    }

    let doc = parse_table_document(&read(&args.input)?)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", args.input.display())))?;
    let scale = match &args.scale {
        Some(path) => Some(
            parse_scale(&read(path)?)
                .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    let options = DecideOptions {
        scale,
        criterion: args.criterion.map(Criterion::from),
        epsilon: args.epsilon,
    };
    let report = decide(&doc.table, method, &options)
        .map_err(|e| decision_failure(&args.input, &doc, e))?;
    let doc = ReportDocument::from(&report);
    let rendered = match args.format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json(),
    };
    Ok((rendered, args.output))
}

/// Runs the command line with `args` (program name first) and returns
/// the process exit code. Nothing is written to `stdout` unless the
/// whole report was produced.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                if e.kind() == clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                    let _ = writeln!(stderr, "error: no command given\n");
                }
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };

    let result = match cli.command {
        Command::Decide(args) => run_decide(args),
    };
    let outcome = result.and_then(|(rendered, output)| match output {
        Some(path) => fs::write(&path, rendered).map_err(|e| {
            Failure::new(EXIT_INPUT, format!("{}: cannot write: {e}", path.display()))
        }),
        None => stdout
            .write_all(rendered.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| Failure::new(EXIT_INPUT, format!("cannot write report: {e}"))),
    });
    match outcome {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
