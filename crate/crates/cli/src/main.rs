//! `contraction`: generate, reduce, solve and verify contraction instances.
//!
//! Exit codes: 0 yes or pass, 1 no or fail, 2 usage or input error, 3 size
//! guard exceeded.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use commands::{Failure, Outcome};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "contraction", version, about = "Contraction problems and their reduction chain")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest core graph (vertex count) the exact solvers will take.
    #[arg(long, global = true, default_value_t = 64)]
    guard: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a random instance.
    Gen(GenArgs),
    /// Apply one construction, or the whole chain with `--chain 3col..<terminal>`.
    Reduce(ReduceArgs),
    /// Decide an instance and print a witness.
    Solve(SolveArgs),
    /// Decide membership of a graph in a class.
    Recognize(RecognizeArgs),
    /// Run randomized equivalence checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
struct GenArgs {
    /// One of 3col, lsh, lsi, xmatch, structured.
    #[arg(long, default_value = "3col")]
    problem: String,
    /// Vertex count of the graph, of g for list problems, or n for xmatch and structured.
    #[arg(long)]
    n: usize,
    /// Vertex count of h for list problems (defaults to n).
    #[arg(long)]
    m: Option<usize>,
    /// Number of colors for list problems.
    #[arg(long, default_value_t = 3)]
    colors: usize,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[arg(long, required_unless_present = "chain")]
    from: Option<String>,
    #[arg(long, required_unless_present = "chain")]
    to: Option<String>,
    /// `3col..hadwiger` or `3col..fcon`.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    chain: Option<String>,
    /// Target class for fcon.
    #[arg(long)]
    class: Option<String>,
    /// Grouping parameter; only 1 is supported.
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Stream every occupancy vector instead of the pruned set.
    #[arg(long)]
    no_prune: bool,
    input: PathBuf,
    /// Output file, or directory for the stream and for `--chain`.
    output: PathBuf,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    problem: String,
    /// Overrides the class of an fcon instance.
    #[arg(long)]
    class: Option<String>,
    /// Overrides the budget of a cliquecon or fcon instance.
    #[arg(long)]
    budget: Option<usize>,
    /// For fcon: search only perfect matchings between the vertices tagged
    /// A and B, as the gadget instances allow.
    #[arg(long)]
    restricted: bool,
    input: PathBuf,
}

#[derive(Debug, Args)]
struct RecognizeArgs {
    #[arg(long)]
    class: String,
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// End-to-end chain runs on random connected graphs.
    Chain(ChainArgs),
    /// Trials of a single construction.
    Hop(HopArgs),
}

#[derive(Debug, Args)]
struct ChainArgs {
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// hadwiger, fcon or both.
    #[arg(long, default_value = "both")]
    terminal: String,
    /// Comma-separated target classes for fcon; all eight by default.
    #[arg(long, value_delimiter = ',')]
    classes: Vec<String>,
    #[arg(long)]
    no_prune: bool,
    /// Write every trial's key=value report here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct HopArgs {
    /// lsh, lsi, xmatch, structured, hadwiger or fcon:<class>.
    #[arg(long)]
    hop: String,
    /// none, drop-ac, drop-bd, drop-noise-joins or drop-pendants.
    #[arg(long, default_value = "none")]
    mutation: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    min_size: usize,
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    /// Decide structured instances with the exhaustive forest search.
    #[arg(long)]
    exhaustive: bool,
    /// Decide gadget instances with the matching-restricted search.
    #[arg(long)]
    restricted: bool,
    #[arg(long)]
    no_prune: bool,
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Text = cli.format;
    let result = match cli.command {
        Command::Gen(a) => commands::gen(&a, cli.seed),
        Command::Reduce(a) => commands::reduce(&a, cli.guard),
        Command::Solve(a) => commands::solve(&a, cli.guard),
        Command::Recognize(a) => commands::recognize(&a),
        Command::Verify(VerifyCommand::Chain(a)) => commands::verify_chain(&a, cli.seed, cli.guard),
        Command::Verify(VerifyCommand::Hop(a)) => commands::verify_hop(&a, cli.seed),
    };
    match result {
        Ok(Outcome::Yes) => ExitCode::from(0),
        Ok(Outcome::No) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(e)) => {
            eprintln!("guard exceeded: {e}");
            ExitCode::from(3)
        }
    }
}
