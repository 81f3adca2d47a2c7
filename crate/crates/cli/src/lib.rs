//! Command-line front end: table files and the subcommands of `rncbetti`.

pub mod commands;
pub mod format;

pub use commands::{invocation, run, run_args, Cli, CliError, RunError};
pub use format::{parse_table, render, render_json, render_m2, render_m2_body, Format, FormatError, Kind, TableDocument};
