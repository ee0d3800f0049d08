use std::process::ExitCode;

use clap::Parser;

use tanglab_cli::{exit_code, run, RunSpec};

fn main() -> ExitCode {
    let spec = RunSpec::parse();
    let result = run(&spec);
    if let Err(e) = &result {
        eprintln!("error: {e}");
    }
    exit_code(&result)
}
