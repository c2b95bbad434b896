use std::process::ExitCode;

use clap::Parser;
use hdqkd_cli::args::{Cli, Command};
use hdqkd_cli::commands;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(a) => commands::run(a),
        Command::ValidateGates(a) => commands::validate_gates(a),
        Command::ReproducePaper(a) => commands::reproduce_paper(a),
        Command::HypothesisTable => commands::hypothesis_table(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hdqkd: {e}");
            e.exit_code()
        }
    }
}
