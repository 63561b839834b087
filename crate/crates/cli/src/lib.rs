//! The `nmsa` command line: argument types, file readers, output documents
//! and subcommand dispatch.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod report;

use args::{Cli, Command};
use error::CliResult;
use report::Render;

/// Runs one parsed invocation and returns what should be printed.
pub fn run(cli: &Cli) -> CliResult<String> {
    Ok(match &cli.command {
        Command::Align(a) => commands::align(a)?.render(a.output.output),
        Command::Oracle(a) => commands::run_oracle(a)?.render(a.output.output),
        Command::Score(a) => commands::score_alignment(a)?.render(a.output.output),
        Command::Classify(a) => commands::classify(a)?.render(a.output.output),
        Command::Eail(a) => commands::eail(a)?.render(a.output.output),
    })
}
