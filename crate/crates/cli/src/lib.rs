//! Command-line front end for the `cauchydisc-core` estimators.
//!
//! The binary exposes five subcommands: `estimate`, `simulate`, `coverage`,
//! `moments`, and `outlier`. Everything here is a thin layer over the core
//! crate: argument parsing, file formats (data files, JSON, CSV, SVG), and
//! exit-code mapping. Exit codes: 0 success, 2 for I/O and parse failures,
//! 3 for domain failures (parameters outside their ranges).

use std::path::PathBuf;

pub mod args;
pub mod commands;
pub mod data;
pub mod doc;
pub mod svg;

/// Everything that can go wrong in the CLI layer, split by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    /// 2 for I/O and parse failures, 3 for domain failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<cauchydisc_core::Error> for CliError {
    fn from(e: cauchydisc_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Caps rayon's global pool when `CAUCHYDISC_THREADS` is set. Results never
/// depend on the thread count; only wall time does.
fn init_threads() -> Result<()> {
    match std::env::var("CAUCHYDISC_THREADS") {
        Ok(raw) => {
            let threads: usize = raw.parse().map_err(|_| {
                CliError::Domain(format!(
                    "CAUCHYDISC_THREADS must be a positive integer, got {raw:?}"
                ))
            })?;
            if threads == 0 {
                return Err(CliError::Domain(
                    "CAUCHYDISC_THREADS must be a positive integer, got \"0\"".into(),
                ));
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global()
                .map_err(|e| CliError::Domain(e.to_string()))
        }
        Err(_) => Ok(()),
    }
}

/// Writes the command output plus a trailing newline. A reader that stops
/// early (closed pipe) is a normal way to consume the output, not an error.
fn print_stdout(text: &str) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let written = out
        .write_all(text.as_bytes())
        .and_then(|()| out.write_all(b"\n"))
        .and_then(|()| out.flush());
    match written {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliError::Io {
            path: PathBuf::from("<stdout>"),
            source: e,
        }),
    }
}

/// Dispatches a parsed command line. Commands hand back the text to print so
/// that output happens in exactly one place.
pub fn run(cli: args::Cli) -> Result<()> {
    init_threads()?;
    let output = match cli.command {
        args::Command::Estimate(a) => Some(commands::estimate(&a)?),
        args::Command::Simulate(a) => commands::simulate(&a)?,
        args::Command::Coverage(a) => Some(commands::coverage(&a)?),
        args::Command::Moments(a) => Some(commands::moments(&a)?),
        args::Command::Outlier(a) => Some(commands::outlier(&a)?),
    };
    if let Some(text) = output {
        print_stdout(&text)?;
    }
    Ok(())
}
