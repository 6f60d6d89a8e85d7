//! `rough-cayley`: a workbench for rough approximations of finite-group
//! subsets and the Cayley / pseudo-Cayley graphs they induce.
//!
//! Exit codes: 0 success (or predicate true), 1 predicate false or law
//! violation, 2 usage or validation error.

mod commands;
mod dot;
mod groupspec;
mod report;

use clap::Parser;

fn main() {
    let cli = match commands::Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own help/version output with exit code 0.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match commands::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
