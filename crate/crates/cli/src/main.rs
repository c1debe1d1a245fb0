use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tilecohom_cli::{run, Cli};

fn main() -> ExitCode {
    let out = run(&Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
