use std::path::PathBuf;

use bol_core::forms::InvarianceVariant;
use bol_core::ideals::IdealMode;
use bol_core::invariant::DEFAULT_SEED;
use bol_core::radical::FormChoice;
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "bol",
    version,
    about = "Exact computations with Bol algebras given by structure constants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for the randomized simplicity search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Killing–Ricci form used by radical and decompose.
    #[arg(long, global = true, value_name = "env|trace", default_value = "env")]
    pub form: FormChoice,

    /// Invariance identities required of the form.
    #[arg(
        long,
        global = true,
        value_name = "skew|symmetric",
        default_value = "skew"
    )]
    pub invariance: InvarianceVariant,

    /// Ideal notion used by the ideal checks of `info`.
    #[arg(
        long = "ideal-mode",
        global = true,
        value_name = "absorbing|weak",
        default_value = "absorbing"
    )]
    pub ideal_mode: IdealMode,

    /// Skip computations whose envelope pair space (n + n² for an
    /// n-dimensional algebra) exceeds this size.
    #[arg(long = "envelope-limit", global = true, value_name = "N")]
    pub envelope_limit: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the Bol-algebra identities; several files are checked concurrently.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Center, derived series, solvability and Killing–Ricci forms.
    Info { file: PathBuf },
    /// Certified radical.
    Radical { file: PathBuf },
    /// Universal enveloping Lie algebra.
    Envelope {
        file: PathBuf,
        /// Write the Lie algebra to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Split a semisimple algebra into simple ideals.
    Decompose { file: PathBuf },
    /// List catalog entries, or print or write one.
    Examples {
        name: Option<String>,
        /// Write the entry to this file instead of standard output.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}
