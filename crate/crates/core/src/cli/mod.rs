//! The `gentrig` command line: `eval`, `verify` and `table`.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails or output
//! cannot be written, 2 on bad flags or arguments outside a function's domain.

mod output;
mod table;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use output::{human, machine, Cell, Format, InputValue, OutputRecord, Table};
pub use table::{build as build_table, header as table_header, TableKind, TableParams};
pub use verify::{run as run_suites, CaseOutcome, Grid, Suite, SuiteReport, ELLIOTT_GRID};

use crate::gtf::{asin_pq, cos_pq, pi_pq, sin_pq, ParamPair};
use crate::oracle::{asin_by_quadrature, pi_by_quadrature};

/// Environment variable that overrides every verification tolerance.
pub const TOL_ENV: &str = "GTF_TOL";

/// Failures of a CLI invocation.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] crate::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Numeric(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gentrig",
    version,
    about = "Generalized trigonometric functions sin_{p,q}, cos_{p,q} and π_{p,q}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function
    Eval {
        #[arg(long = "fn", value_enum)]
        function: Function,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        /// Argument; required except for `pi`
        #[arg(long)]
        x: Option<f64>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run identity-verification suites
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_enum, default_value = "small")]
        grid: Grid,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a table of closed-form values
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        q: Option<f64>,
        /// Exponent offsets for the Wallis tables (comma separated)
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        r: Vec<f64>,
        #[arg(long)]
        nmax: Option<u32>,
        /// Number of product factors
        #[arg(long = "N")]
        terms: Option<u64>,
        #[arg(long)]
        m: Option<f64>,
        /// Interval length
        #[arg(long = "H")]
        length: Option<f64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Sin,
    Cos,
    Asin,
    Pi,
}

/// Evaluates one function. `asin` and `pi` carry a quadrature oracle.
pub fn eval_record(
    function: Function,
    p: f64,
    q: f64,
    x: Option<f64>,
) -> Result<OutputRecord, CliError> {
    let name = function
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_owned();
    let record = |value: f64| {
        OutputRecord::new("eval", value)
            .input("fn", name.as_str())
            .input("p", p)
            .input("q", q)
    };
    if function == Function::Pi {
        if x.is_some() {
            return Err(CliError::Usage("--x does not apply to --fn pi".into()));
        }
        let value = pi_pq(ParamPair::extended(p, q)?);
        let rec = record(value);
        return Ok(if ParamPair::new(p, q).is_ok() {
            rec.with_oracle(pi_by_quadrature(p, q)?)
        } else {
            rec
        });
    }
    let x = x.ok_or_else(|| CliError::Usage(format!("--fn {name} needs --x")))?;
    let params = ParamPair::new(p, q)?;
    Ok(match function {
        Function::Sin => record(sin_pq(params, x)?).input("x", x),
        Function::Cos => record(cos_pq(params, x)?).input("x", x),
        Function::Asin => {
            let value = asin_pq(params, x)?;
            record(value)
                .input("x", x)
                .with_oracle(asin_by_quadrature(p, q, x)?)
        }
        Function::Pi => unreachable!(),
    })
}

fn tol_override() -> Result<Option<f64>, CliError> {
    match std::env::var(TOL_ENV) {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| *t >= 0.0)
            .map(Some)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{TOL_ENV} must be a non-negative number, got {s:?}"
                ))
            }),
        Err(_) => Ok(None),
    }
}

fn emit(text: &str, out: Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|source| CliError::Io { path, source }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Eval {
            function,
            p,
            q,
            x,
            format,
            out,
        } => {
            let record = eval_record(function, p, q, x)?;
            emit(&record.render(format), out, stdout)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            grid,
            format,
            out,
        } => {
            let tol = tol_override()?;
            let reports = run_suites(suite, grid, tol);
            let mut text: String = reports.iter().map(|r| r.render(format)).collect();
            let passed = reports.iter().all(SuiteReport::passed);
            if suite == Suite::All {
                let worst = reports
                    .iter()
                    .map(SuiteReport::max_residual)
                    .fold(0.0, f64::max);
                text.push_str(&verify::summary("all", passed, worst));
                text.push('\n');
            }
            emit(&text, out, stdout)?;
            Ok(if passed { 0 } else { 1 })
        }
        Command::Table {
            kind,
            p,
            q,
            r,
            nmax,
            terms,
            m,
            length,
            samples,
            format,
            out,
        } => {
            let params = TableParams {
                p,
                q,
                r,
                nmax,
                terms,
                m,
                length,
                samples,
            };
            let table = build_table(kind, &params)?;
            emit(&table.render(format), out, stdout)?;
            Ok(0)
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
