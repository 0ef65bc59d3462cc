//! Command-line front end for the transversal toolkit.
//!
//! Parsing, serialization, and command execution are library functions
//! so they can be driven in-process; the binary is a thin shell around
//! [`run`]. Results go to stdout, diagnostics to stderr, and the exit
//! code follows the verdict: 0 holds/found, 1 fails/exhausted, 2 bad
//! input or usage.

pub mod cli;
pub mod commands;
pub mod format;

pub use cli::Cli;
pub use commands::{execute, CliError, CommandOutput, ExitStatus};

/// Executes a parsed command line and returns the process exit code,
/// writing the report to stdout and any diagnostics to stderr.
pub fn run(cli: Cli) -> i32 {
    match execute(cli.command) {
        Ok(output) => {
            print!("{}", output.stdout);
            eprint!("{}", output.diagnostics);
            output.status.code()
        }
        Err(error) => {
            eprintln!("error: {error}");
            error.status().code()
        }
    }
}
