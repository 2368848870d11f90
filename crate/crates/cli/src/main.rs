use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = rpq_cli::Cli::parse();
    match rpq_cli::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
