//! Command-line front end for `apolar-core`.
//!
//! Each subcommand produces a [`Report`]; `main` renders it as a human
//! summary, as JSON, or both, and exits with [`Report::exit_code`].

pub mod args;
pub mod commands;
pub mod error;
pub mod points;
pub mod report;
pub mod summary;

pub use args::{Cli, Command, GlobalArgs};
pub use commands::run;
pub use error::CliError;
pub use report::Report;
