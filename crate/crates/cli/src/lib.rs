//! File formats and commands of the `bol` tool.

pub mod cli;
pub mod commands;
pub mod format;

pub use commands::{run, run_args, Output, EXIT_FAILED, EXIT_INPUT, EXIT_OK, EXIT_UNDECIDED};
