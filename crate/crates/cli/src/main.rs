//! `stabkit`: solve, reduce, verify and explore stable-set problems.
//!
//! Exit codes: 0 success, 1 no result (a randomized run failed or a
//! checked solution was rejected), 2 invalid input or contract violation.

mod bench;
mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Outcome;

#[derive(Debug, Parser)]
#[command(name = "stabkit", version, about = "Stable sets in cycles: solvers, reductions and oracles")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized modes.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Vertex cap for explicit graphs and brute-force searches.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance.
    #[command(subcommand)]
    Solve(SolveCommand),

    /// Split [4k] into four stable k-sets along a partition into 4-sets.
    Split4 {
        #[arg(long)]
        instance: String,
    },

    /// Check a solution against an instance.
    #[command(subcommand)]
    Verify(VerifyCommand),

    /// Transform an instance of one problem into another.
    #[command(subcommand)]
    Reduce(ReduceCommand),

    /// List combinatorial objects.
    #[command(subcommand)]
    Enumerate(EnumerateCommand),

    /// Known bounds and exact values of graph parameters.
    Extremal {
        parameter: Parameter,
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Also compute the exact value on the explicit graph.
        #[arg(long)]
        exact: bool,
    },

    /// Timing runs, printed as CSV.
    Bench {
        #[arg(long, value_enum)]
        suite: bench::Suite,
    },
}

#[derive(Debug, Subcommand)]
pub enum SolveCommand {
    /// Find a monochromatic edge in a coloring of S(n, k).
    Schrijver {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// A coloring file, or `rule:NAME[,SEED]`.
        #[arg(long)]
        coloring: String,
        /// `brute`, `interval:D`, `lift4k` or `kneser`.
        #[arg(long)]
        method: String,
    },
    /// Find an unfair stable k-set.
    Uncovered {
        #[arg(long)]
        instance: String,
        /// `derandomized`, `randomized[:SEED]` or `brute`.
        #[arg(long)]
        method: String,
        /// Independent trials for the randomized method (seeds SEED, SEED+1, ...).
        #[arg(long, default_value_t = 1)]
        retries: u64,
    },
    /// Independent set of size k in a cycle-plus-triangles graph.
    Ct {
        #[arg(long = "in")]
        input: String,
        /// `via-uncovered:brute` or `via-uncovered:derandomized`.
        #[arg(long)]
        method: String,
    },
    /// Fair stable set for a partition into odd parts.
    Fisc {
        #[arg(long = "in")]
        input: String,
        /// `via-uncovered:brute` or `via-uncovered:derandomized`.
        #[arg(long)]
        method: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    Uncovered {
        #[arg(long)]
        instance: String,
        #[arg(long)]
        solution: String,
    },
    Ct {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        solution: String,
    },
    Fisc {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        solution: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    FiscToUncovered {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: String,
    },
    CtToUncovered {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum EnumerateCommand {
    /// Stable k-subsets of [n] in lexicographic order.
    Stable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Ignore the wraparound pair {1, n}.
        #[arg(long)]
        linear: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Parameter {
    Chi,
    Alpha,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::NoResult) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
