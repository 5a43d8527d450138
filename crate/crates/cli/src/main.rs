use std::process::ExitCode;

use clap::Parser;
use twogon_cli::app::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    ExitCode::from(run(&cli, &mut stdout.lock(), &mut stderr.lock()))
}
