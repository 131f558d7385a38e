//! Command-line surface for the qubit-geometry library: evaluate single
//! states, sweep parameter grids, run the verification suite, and run
//! randomized oracle-equivalence comparisons.
//!
//! All commands are deterministic: a fixed configuration (including the
//! seed) produces byte-identical output, regardless of how the randomized
//! commands are sharded across threads.

pub mod args;
pub mod compare;
pub mod error;
pub mod eval;
pub mod render;
pub mod statespec;
pub mod sweep;
pub mod verify;

use args::{Cli, Command};
use error::CliError;

/// Result of a command: what goes to the output sink, and the process exit
/// code (0 success, 1 verification failure).
#[derive(Debug)]
pub struct CommandOutput {
    pub text: String,
    pub exit_code: i32,
}

pub fn execute(cli: &Cli) -> Result<CommandOutput, CliError> {
    match &cli.command {
        Command::Eval(a) => eval::run(a),
        Command::Sweep(a) => sweep::run(a),
        Command::Verify(a) => verify::run(a),
        Command::CompareRandom(a) => compare::run(a),
    }
}
