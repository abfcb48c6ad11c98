use std::process::ExitCode;

use clap::Parser;
use pathhom_cli::{run, Cli, CliError};

fn fail(e: CliError) -> ExitCode {
    eprintln!("pathhom: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|o| o.emit()) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(e)) | Err(e) => fail(e),
    }
}
