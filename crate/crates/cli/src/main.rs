//! `secdom`: generate graphs, solve and verify domination variants,
//! recognize graph classes and build reduction gadgets.
//!
//! Graphs travel between subcommands as edge lists on standard input and
//! output, so `secdom gen path 10 | secdom solve insdom` works.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 negative answer (no
//! feasible set, set fails verification, graph not in class), 3 budget
//! exhausted or search unresolved.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use secdom::reductions::{ReductionKind, Y1Rule};
use secdom::{SearchBudget, Variant};

#[derive(Parser, Debug)]
#[command(
    name = "secdom",
    version,
    about = "Secure, independent and isolate domination toolkit"
)]
pub struct Cli {
    /// Read the graph from this file instead of standard input.
    #[arg(long, short, global = true, conflicts_with = "graph")]
    pub input: Option<PathBuf>,

    /// Inline graph `n:u-v,u-v,...`, e.g. `4:0-1,1-2,2-3`.
    #[arg(long, global = true)]
    pub graph: Option<String>,

    #[arg(long, short, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    #[command(flatten)]
    pub budget: BudgetArgs,

    /// Seed for `gen random`.
    #[arg(long, global = true, env = "SECDOM_SEED", default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct BudgetArgs {
    /// Largest graph the exact solver accepts (at most 64).
    #[arg(long, global = true, env = "SECDOM_MAX_N", default_value_t = 24,
          value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_n: u64,

    /// Search nodes before giving up.
    #[arg(long, global = true, env = "SECDOM_MAX_CANDIDATES", default_value_t = 100_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_candidates: u64,

    /// Wall-clock limit in seconds.
    #[arg(long, global = true, env = "SECDOM_TIME_LIMIT", default_value_t = 60,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub time_limit: u64,

    /// Split the search across threads.
    #[arg(long, global = true)]
    pub parallel: bool,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_n: self.max_n as usize,
            max_candidates: self.max_candidates,
            time_limit: Duration::from_secs(self.time_limit),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphClass {
    Bipartite,
    Split,
    Threshold,
    Peb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Y1Choice {
    /// `y` has no neighbor of degree 1.
    NoPendant,
    /// `y` has a neighbor of degree 1.
    Pendant,
}

impl From<Y1Choice> for Y1Rule {
    fn from(c: Y1Choice) -> Self {
        match c {
            Y1Choice::NoPendant => Y1Rule::NoPendantNeighbor,
            Y1Choice::Pendant => Y1Rule::PendantNeighbor,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a named graph: path N, cycle N, complete N, bipartite P Q,
    /// star Q, wheel N, grid M K, apex <family...>, random N P.
    Gen {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
    },
    /// Minimum set for a variant (dom, indom, idom, sdom, insdom).
    Solve {
        #[arg(value_parser = parse_variant)]
        variant: Variant,
        /// Decide whether a set of size at most K exists instead.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check a vertex set against a variant.
    Verify {
        #[arg(value_parser = parse_variant)]
        variant: Variant,
        /// Comma-separated 0-based vertex ids.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Test class membership and print a certificate.
    Recognize {
        #[arg(value_enum)]
        class: GraphClass,
    },
    /// Build a reduction gadget: setcover, peb, insdm, gp, apx. `setcover`
    /// reads an instance (`n m` then one line per subset) instead of a graph.
    Reduce {
        #[arg(value_parser = parse_reduction)]
        which: ReductionKind,
        /// Which `y` receive a pendant path in the peb gadget.
        #[arg(long, value_enum, default_value_t = Y1Choice::NoPendant)]
        y1: Y1Choice,
        /// Side X of the bipartition for peb, as comma-separated ids.
        /// Defaults to the side holding vertex 0 of each component.
        #[arg(long)]
        side: Option<String>,
    },
    /// Closed-form InSDS number of a named family.
    Family {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: secdom::Error| e.to_string())
}

fn parse_reduction(s: &str) -> Result<ReductionKind, String> {
    s.parse().map_err(|e: secdom::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
