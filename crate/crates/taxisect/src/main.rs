use std::io;
use std::process::ExitCode;

use clap::Parser;
use taxisect::cli::{self, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors, matching ours.
    let cli = Cli::parse();
    let code = cli::run(cli, &mut io::stdout().lock(), &mut io::stderr().lock(), cli::colour_enabled());
    ExitCode::from(code as u8)
}
