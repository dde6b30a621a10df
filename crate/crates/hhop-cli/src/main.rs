//! `hhop`: batch front end for the hhop library.
//!
//! Exit status: 0 when every requested check passes, 1 on a verification
//! failure, 2 on a malformed request or unparsable input, 3 when a resource
//! bound is exceeded.

mod args;
mod fixtures;
mod report;
mod run;
mod targets;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use report::Outcome;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap already maps usage errors to 2; --help and --version to 0.
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let format = cli.format();
    match run::execute(&cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(outcome.report.render(format).as_bytes());
            ExitCode::from(outcome.status())
        }
        Err(e) => {
            eprintln!("hhop: {e:#}");
            ExitCode::from(Outcome::error_status(&e))
        }
    }
}
