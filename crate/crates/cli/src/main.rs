//! `svcfc`: command-line front end for strong conflict-free
//! vertex-connection colorings.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
//! 3 a size cap was exceeded.

mod commands;
mod input;
mod outcome;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "svcfc",
    version,
    about = "Strong conflict-free vertex-connection colorings"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a coloring is a strong conflict-free vertex-connection coloring.
    Verify(VerifyArgs),
    /// Compute the svcfc number and a witness coloring.
    Solve(SolveArgs),
    /// Print structural properties of a graph.
    Props {
        /// Graph file (DIMACS, labeled DIMACS or edge list; `-` for stdin).
        graph: PathBuf,
    },
    /// Generate gadgets and diameter extensions.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Write the labeled graph here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Also write the canonical coloring, when defined, as a coloring document.
        #[arg(long, global = true)]
        coloring_out: Option<PathBuf>,
    },
    /// Build the 3-SAT reduction graph for a DIMACS CNF file.
    Reduce(ReduceArgs),
    /// Run the property suites behind the acceptance criteria.
    Harness(HarnessArgs),
    /// Render a graph, optionally colored, as Graphviz DOT.
    Dot {
        graph: PathBuf,
        /// Coloring document used for node fills.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    coloring: PathBuf,
    /// On failure, print the level graph of the failing pair.
    #[arg(long)]
    explain: bool,
    /// Cross-check every pair against shortest-path enumeration.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    /// Exhaustive search only.
    #[arg(long, conflicts_with = "auto")]
    exact: bool,
    /// Class recognition first, then exhaustive search (default).
    #[arg(long)]
    auto: bool,
    /// Give up (exit 1) above this many colors.
    #[arg(long = "max-k", value_name = "K")]
    max_k: Option<usize>,
    /// Write the witness coloring document here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenKind {
    /// The gadget Q_n (3n + 1 vertices, diameter 2n).
    Qn { n: usize },
    /// The gadget R_n (diameter 2n - 1), n >= 2.
    Rn { n: usize },
    /// A graph plus one vertex adjacent to all others.
    Apex { graph: PathBuf },
    /// Attach Q or R to a connected graph so the result has diameter d >= 3.
    ExtendHighk { graph: PathBuf, d: usize },
    /// Glue Q or R onto a reduction instance so the result has diameter d >= 4.
    ExtendK3 { instance: PathBuf, d: usize },
}

#[derive(Args)]
struct ReduceArgs {
    cnf: PathBuf,
    /// Extend the instance to this diameter (>= 4; 3 keeps it unchanged).
    #[arg(long)]
    diameter: Option<usize>,
    /// Do not add a padding variable for clauses that mention every variable.
    #[arg(long)]
    no_pad: bool,
    /// Write the labeled instance here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HarnessArgs {
    /// all, verifier, props, reduction or classes.
    #[arg(default_value = "all")]
    suite: String,
    /// Seconds allowed per criterion.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => commands::verify(&a.graph, &a.coloring, a.explain, a.oracle),
        Command::Solve(a) => commands::solve(&a.graph, a.exact, a.max_k, a.out.as_deref()),
        Command::Props { graph } => commands::props(&graph),
        Command::Gen {
            kind,
            out,
            coloring_out,
        } => {
            let request = match kind {
                GenKind::Qn { n } => commands::GenSpec::Q(n),
                GenKind::Rn { n } => commands::GenSpec::R(n),
                GenKind::Apex { graph } => commands::GenSpec::Apex(graph),
                GenKind::ExtendHighk { graph, d } => commands::GenSpec::ExtendHighk(graph, d),
                GenKind::ExtendK3 { instance, d } => commands::GenSpec::ExtendK3(instance, d),
            };
            commands::gen(request, out.as_deref(), coloring_out.as_deref())
        }
        Command::Reduce(a) => commands::reduce(&a.cnf, a.diameter, a.no_pad, a.out.as_deref()),
        Command::Harness(a) => commands::harness(&a.suite, a.budget, a.seed),
        Command::Dot { graph, coloring } => commands::dot(&graph, coloring.as_deref()),
    };
    match result {
        Ok(outcome) => outcome.emit(cli.json),
        Err(e) => e.emit(cli.json),
    }
}
