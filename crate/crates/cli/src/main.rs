use std::process::ExitCode;

use clap::Parser;

use gcqc_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gcqc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
