//! Command-line frontend for `enumerlab-core`.

pub mod args;
pub mod dispatch;
pub mod figures;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
pub use dispatch::{run, CliError, ExitStatus, Output, BUDGET_ENV, DISPATCH_TABLE};

/// Parses `argv`, runs the command and writes its output. Returns the
/// process exit code.
pub fn main_with<I, T>(argv: I, env_budget: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    ExitStatus::Success.code()
                }
                _ => ExitStatus::Usage.code(),
            };
        }
    };
    match run(&cli, env_budget) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.text).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                }),
                None => stdout.write_all(out.text.as_bytes()).map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                }),
            };
            match written {
                Ok(()) => out.status.code(),
                Err(e) => {
                    let _ = write!(stderr, "{}", e.diagnostic());
                    e.status().code()
                }
            }
        }
        Err(e) => {
            let _ = write!(stderr, "{}", e.diagnostic());
            e.status().code()
        }
    }
}
