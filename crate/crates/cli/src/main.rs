use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use gallery::{run, Cli, CliError};

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.report());
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Parse(e.to_string().trim_end().to_string())),
    };
    let text = match run(&cli) {
        Ok(text) => text,
        Err(e) => return fail(&e),
    };
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::from),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}
