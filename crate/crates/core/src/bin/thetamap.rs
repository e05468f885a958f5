use std::io;
use std::process::ExitCode;

use clap::Parser;
use thetamap::cli::{self, Cli};

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { cli::EXIT_USAGE } else { cli::EXIT_OK });
        }
    };
    let code = cli::run(parsed, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
