//! Command-line workflows: index a project, complete code with grounding,
//! and evaluate on tasks built from a project.

pub mod commands;
pub mod config;

use clap::{Parser, Subcommand};

pub use commands::{cmd_complete, cmd_eval, cmd_index, CompleteArgs, EvalArgs, IndexArgs, Io};
pub use config::{RunConfig, RunFlags};

#[derive(Debug, Parser)]
#[command(name = "apiground", version, about = "Ground LLM code completion in a project's own API")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extract and embed a project's API references into an index directory.
    Index(IndexArgs),
    /// Complete the code in a context file.
    Complete(CompleteArgs),
    /// Build completion tasks from a project and score each prompt type.
    Eval(EvalArgs),
}

pub fn run(cli: &Cli, io: &mut Io<'_>) -> i32 {
    match &cli.command {
        Command::Index(args) => cmd_index(args, io),
        Command::Complete(args) => cmd_complete(args, io),
        Command::Eval(args) => cmd_eval(args, io),
    }
}
