//! File formats, JSON reports and the command-line front end for
//! [`morava_core`].

pub mod cli;
pub mod error;
pub mod formats;
pub mod report;

pub use cli::{execute, run, Cli, Outcome};
pub use error::{CliError, ExitCode};
