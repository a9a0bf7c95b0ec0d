use std::process::ExitCode;

use clap::Parser;
use latticemill_cli::{configure_threads, exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    exit_code(configure_threads().and_then(|()| run(cli)))
}
