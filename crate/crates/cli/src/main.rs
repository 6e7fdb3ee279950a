use std::io;
use std::process::ExitCode;

use clap::Parser;
use maxsym_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(&cli, std::env::var("MAXSYM_TOL").ok(), &mut io::stdout().lock(), &mut io::stderr());
    ExitCode::from(code as u8)
}
