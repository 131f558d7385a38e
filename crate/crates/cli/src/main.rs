use clap::error::ErrorKind;
use clap::Parser;
use qubit_geometry_cli::args::{Cli, Command};
use qubit_geometry_cli::error::{CliError, EXIT_INPUT_ERROR, EXIT_IO_ERROR};
use qubit_geometry_cli::execute;
use std::path::PathBuf;
use std::process::ExitCode;

fn output_path(cli: &Cli) -> Option<PathBuf> {
    match &cli.command {
        Command::Eval(a) => a.output.clone(),
        Command::Sweep(a) => a.output.clone(),
        Command::Verify(a) => a.output.clone(),
        Command::CompareRandom(a) => a.output.clone(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests go to stdout and exit cleanly;
            // everything else is an input error.
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INPUT_ERROR,
            };
            let _ = err.print();
            return ExitCode::from(code as u8);
        }
    };

    let sink = output_path(&cli);
    match execute(&cli) {
        Ok(result) => {
            if let Some(path) = sink {
                if let Err(err) = std::fs::write(&path, &result.text) {
                    eprintln!("i/o error: cannot write {}: {err}", path.display());
                    return ExitCode::from(EXIT_IO_ERROR as u8);
                }
            } else {
                print!("{}", result.text);
            }
            ExitCode::from(result.exit_code as u8)
        }
        Err(err @ CliError::Input(_)) | Err(err @ CliError::Io(_)) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
