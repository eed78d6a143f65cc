use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ddrs_core::{Strategy, Style, View};

#[derive(Debug, Parser)]
#[command(name = "ddrs", version, about = "Rewrite systems for integer and natural-number arithmetic")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Catalog system id, or `all` for `check`.
    #[arg(long, global = true)]
    pub system: Option<String>,

    /// Reduction strategy: leftmost-innermost or leftmost-outermost.
    #[arg(long, global = true, default_value = "li")]
    pub strategy: Strategy,

    /// Term layout. Defaults to compact for unary systems, minimal otherwise.
    #[arg(long, global = true)]
    pub style: Option<Style>,

    /// Write the reduction as JSON lines.
    #[arg(long, global = true, value_name = "PATH")]
    pub trace: Option<PathBuf>,

    /// Write the result as JSON.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    #[arg(long, global = true, env = "DDRS_SEED", default_value_t = 42)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = ddrs_core::rewrite::DEFAULT_MAX_STEPS)]
    pub max_steps: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite a term to normal form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        term: String,
    },
    /// Print the integer value of a term.
    Eval {
        #[arg(allow_hyphen_values = true)]
        term: String,
    },
    /// Print the canonical numeral with the same value.
    Convert {
        /// ring, unary or successor, optionally with a -nat suffix.
        #[arg(long)]
        to: View,
        #[arg(allow_hyphen_values = true)]
        term: String,
    },
    /// List every redex as `position rule`.
    Redexes {
        #[arg(allow_hyphen_values = true)]
        term: String,
    },
    /// Print the termination weight of a term, or `overflow`.
    Weight {
        #[arg(allow_hyphen_values = true)]
        term: String,
    },
    /// Print the rules of a system, or list the catalog.
    Show { id: Option<String> },
    /// Run check suites.
    Check(CheckArgs),
    /// Re-execute a trace file and print its final term.
    Replay { path: PathBuf },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// soundness, termination, confluence, determinism, characterization,
    /// fixtures, or all.
    #[arg(long, default_value = "all")]
    pub suite: String,

    /// Exhaustive enumeration bound in nodes.
    #[arg(long)]
    pub max_size: Option<usize>,

    /// Random instances per rule for the soundness suite.
    #[arg(long)]
    pub samples: Option<usize>,

    /// Random terms per system.
    #[arg(long)]
    pub random_terms: Option<usize>,
}
