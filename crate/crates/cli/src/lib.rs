//! Command-line front end: tables of `ω₂` cells, the `M_g` series, the
//! genus Laurent polynomials and the verification suites.
//!
//! Records serialize exactly (see [`records`]); the text table is the
//! human-facing layout with one row per genus.

pub mod args;
pub mod commands;
pub mod error;
pub mod records;
pub mod render;

use std::fs;

pub use args::{Cli, Command, Format, LaurentKind, Suite};
pub use error::{CliError, CliResult};

/// Environment variable capping the worker count.
pub const THREADS_VAR: &str = "W2_THREADS";

/// Sizes the global rayon pool from `W2_THREADS` if set.
pub fn configure_threads() -> CliResult<()> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size thread pool: {e}")))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

/// What a command produced: the main output plus an optional note for
/// stderr.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub note: Option<String>,
}

fn emit(text: String, out: Option<&std::path::Path>) -> CliResult<String> {
    match out {
        Some(path) => {
            fs::write(path, text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Omega2 {
            max_genus,
            max_points,
            basis,
            format,
            out,
        } => {
            let text = commands::cmd_omega2(*max_genus, *max_points, *basis, *format)?;
            Ok(Output {
                stdout: emit(text, out.as_deref())?,
                note: None,
            })
        }
        Command::ChiMg {
            max_genus,
            signs,
            format,
            out,
        } => {
            let text = commands::cmd_chi_mg(*max_genus, *format)?;
            let note = if *signs {
                Some(commands::sign_summary(*max_genus)?)
            } else {
                None
            };
            Ok(Output {
                stdout: emit(text, out.as_deref())?,
                note,
            })
        }
        Command::Laurent { what, genus } => Ok(Output {
            stdout: commands::cmd_laurent(*what, *genus)?,
            note: None,
        }),
        Command::Verify {
            suite,
            max_genus,
            max_points,
        } => Ok(Output {
            stdout: commands::cmd_verify(*suite, *max_genus, *max_points)?,
            note: None,
        }),
    }
}
