//! Command-line front end for the `spmw` library.
//!
//! Exit codes: 0 for success (or a true verdict), 1 for a failed check
//! (or a false verdict), 2 for usage, parse, or input errors.

pub mod commands;
pub mod format;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use format::Format;

#[derive(Parser)]
#[command(name = "spmw", version, about = "Series-parallel Merino-Welsh toolkit")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print extra diagnostics.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the survivor table and classify every pairwise combination.
    ///
    /// Exits 0 only when the search closes on the pinned table and every
    /// consistency check passes.
    #[command(visible_alias = "search")]
    Tables {
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Largest combined edge count a candidate pair may have.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u8).range(1..=16))]
        max_edges: u8,
        /// Directory to write the tables into instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a decomposition expression and cross-check it by enumeration.
    Eval {
        /// Expression over K, S(...), P(...), e.g. "S(K,P(K,K))".
        expr: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count orientations and spanning trees of a graph file and test the
    /// three conjectured inequalities.
    Check {
        /// Edge-list file: "V E" header, optional "s t" line, then E lines "u v".
        file: PathBuf,
    },
    /// Decide whether one two-terminal network can stand in for another.
    Replaces {
        /// Expression for the network being replaced.
        from: String,
        /// Expression for the candidate stand-in.
        to: String,
    },
    /// Cross-check the doubled-cycle ring family three ways.
    Thomassen {
        /// Ring size; the graph has n vertices and 2n-2 edges.
        #[arg(value_parser = clap::value_parser!(u8).range(4..=12))]
        n: u8,
    },
}

/// Parses the command line and runs the selected command, returning the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match cli.command {
        Command::Tables { format, max_edges, out } => {
            commands::tables(format, max_edges as usize, out.as_deref(), cli.verbose)
        }
        Command::Eval { expr, format } => commands::eval(&expr, format),
        Command::Check { file } => commands::check(&file),
        Command::Replaces { from, to } => commands::replaces(&from, &to),
        Command::Thomassen { n } => commands::thomassen(n as usize),
    }
}
