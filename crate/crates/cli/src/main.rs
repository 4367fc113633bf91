//! `pfun`: evaluation, constants, convexity checks, threshold roots and
//! tables of the generalized trigonometric and hyperbolic functions.
//!
//! Exit codes: 0 success (every checked claim holds), 1 a claim is
//! violated, 2 usage or domain error, 3 a check was inconclusive.

mod args;
mod commands;
mod number;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

pub const EXIT_VIOLATED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

/// What a command produced: text for stdout and the exit status.
pub struct Output {
    pub text: String,
    pub status: u8,
}

fn run(cli: Cli) -> Result<Output, String> {
    match cli.command {
        Command::Eval {
            function,
            p,
            x,
            format,
        } => commands::eval(&function, p, x, format),
        Command::Const { name, p, format } => commands::constant(&name, p, format),
        Command::Check {
            claim,
            p,
            n,
            domain,
            reverse,
            format,
        } => commands::check(&claim, &p, n, domain, reverse, format),
        Command::Roots { p, format } => commands::roots(&p, format),
        Command::Table {
            function,
            p,
            domain,
            n,
            format,
        } => commands::table(&function, p, domain, n, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            // A closed pipe is not worth a panic.
            let _ = std::io::stdout().lock().write_all(out.text.as_bytes());
            ExitCode::from(out.status)
        }
        Err(msg) => {
            let _ = writeln!(std::io::stderr(), "error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
