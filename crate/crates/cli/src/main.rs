use std::io::Write;
use std::process::ExitCode;

use binomideal_cli::{run, Args};
use clap::Parser;

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = run(&args);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
