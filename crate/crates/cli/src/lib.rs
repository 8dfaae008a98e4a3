//! Command-line front end: algebra descriptions, verification commands and
//! their reports.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod specfile;

pub use args::Cli;
pub use commands::run;
pub use error::CliError;
pub use output::Outcome;
