//! Command-line front end for `pathhom-core`: graph files in, JSON reports
//! and curve files out.
//!
//! Every command is a pure function of its arguments and input files, so
//! reruns with the same seed produce byte-identical output at any thread
//! count. Wall times appear only when `--timings` is given.

pub mod args;
pub mod commands;
pub mod error;
pub mod io;
pub mod report;

pub use args::{Cli, Command};
pub use error::CliError;
pub use report::{Outcome, Report};

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Betti(a) => commands::betti::run(a),
        Command::Sample(a) => commands::sample::run(a),
        Command::Compare(a) => commands::compare::run(a),
        Command::Persist(a) => commands::persist::run(a),
        Command::Preprocess(a) => commands::preprocess::run(a),
    }
}
