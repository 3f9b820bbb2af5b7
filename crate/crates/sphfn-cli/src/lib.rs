//! Command-line front end: `eval`, `table`, `verify`, `spectrum`, `expand`.
//!
//! Exit codes: 0 success, 1 suite failure, 2 usage error, 3 numerical error.

pub mod args;
mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde_json::json;

pub use args::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] sphfn_core::Error),
    #[error("non-finite value in {0}")]
    NonFinite(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric(_) | CliError::NonFinite(_) => EXIT_NUMERIC,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Numeric(e) => e.name(),
            CliError::NonFinite(_) => "NonFiniteValue",
        }
    }
}

/// What a command produced: text for stdout and an exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var("SPHFN_THREADS") {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("SPHFN_THREADS must be a positive integer, got {s:?}"))),
        },
    }
}

fn error_outcome(e: &CliError) -> Outcome {
    let body = json!({ "error": e.name(), "message": e.to_string() });
    Outcome { stdout: format!("{body}\n"), code: e.code() }
}

/// Parses `argv` (including the program name) and runs the command.
/// Usage errors from the parser come back as `Err` with clap's message.
pub fn run<I, T>(argv: I) -> Result<Outcome, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let threads = match threads_from_env() {
        Ok(t) => t,
        Err(e) => return Ok(error_outcome(&e)),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Ok(error_outcome(&CliError::Usage(e.to_string()))),
    };
    let result = pool.install(|| commands::dispatch(&cli.command));
    Ok(match result {
        Ok(o) => o,
        Err(e) => error_outcome(&e),
    })
}

/// Entry point for the binary: prints and returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match run(argv) {
        Ok(o) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(o.stdout.as_bytes());
            let _ = out.flush();
            o.code
        }
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}
