//! `argnlg`: AIF argument networks in, semantics and generated text out.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "argnlg", version, about = "Argumentation semantics and explanations for AIF graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an AIF graph and list every invariant violation.
    Validate,
    /// Compile a graph into rules and facts, with its arguments and attacks.
    Compile,
    /// Extensions, labellings and issues under one semantics.
    Semantics,
    /// Acceptance verdict for one argument, with its dispute tree.
    Status,
    /// Generate text for a communicative goal.
    Explain,
    /// Download a graph and store it as AIF-JSON.
    Fetch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    Complete,
    Preferred,
    Grounded,
    Stable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GoalArg {
    PresentArgument,
    PresentNetwork,
    ExplainAcceptability,
    ExplainExtensions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StyleArg {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderingArg {
    Length,
    Attacks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ImplicitArg {
    Improve,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Markdown,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Credulous,
    Skeptical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Lines,
    Enumerate,
}

#[derive(Debug, clap::Args)]
pub struct Options {
    /// AIF-JSON file to read.
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Knowledge base JSON (as written by `compile --format json`) instead of a graph.
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "input")]
    pub from_kb: Option<PathBuf>,
    /// Base URL of an AIFdb-style server.
    #[arg(long, global = true, env = "ARG_NLG_ENDPOINT", value_name = "URL")]
    pub endpoint: Option<String>,
    /// Graph id on the endpoint.
    #[arg(long, global = true, value_name = "ID")]
    pub id: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "preferred")]
    pub semantics: SemanticsArg,
    #[arg(long, global = true, value_enum, default_value = "present-network")]
    pub goal: GoalArg,
    /// Argument id (`A2`) or claim (`T3`, `~T3`).
    #[arg(long, global = true)]
    pub target: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "backward")]
    pub style: StyleArg,
    /// Bring in whatever else in the base bears on the target's claim.
    #[arg(long, global = true)]
    pub expand: bool,
    #[arg(long, global = true, value_enum, default_value = "length")]
    pub ordering: OrderingArg,
    /// Mention unstated premises; given bare it means `report`.
    #[arg(long, global = true, value_enum, num_args = 0..=1, default_missing_value = "report")]
    pub implicit_premise: Option<ImplicitArg>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: FormatArg,
    /// Largest framework the exhaustive semantics will take on.
    #[arg(long, global = true, value_name = "N", default_value_t = argnlg_core::af::DEFAULT_MAX_ARGS)]
    pub max_args: usize,
    #[arg(long, global = true, value_enum, default_value = "credulous")]
    pub mode: ModeArg,
    /// How `present-network` organises the arguments.
    #[arg(long, global = true, value_enum, default_value = "lines")]
    pub strategy: StrategyArg,
    /// Leave out the `[T1]`-style proposition tags.
    #[arg(long, global = true)]
    pub no_tags: bool,
    /// Leave out discourse markers.
    #[arg(long, global = true)]
    pub no_markers: bool,
    /// Where `fetch` writes the graph (stdout when absent).
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            if !report.text.is_empty() {
                println!("{}", report.text);
            }
            ExitCode::from(report.status)
        }
        Err(failure) => {
            eprintln!("error: {:#}", failure.error());
            ExitCode::from(failure.code())
        }
    }
}
