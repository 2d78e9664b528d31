use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vital_cli::commands::{
    command_check, command_embed, command_generate, command_partition, command_pathwidth,
    command_random, CheckOpts, CommandError,
};

/// Vitality checker for two-path linked graphs.
///
/// Exit codes: 0 positive verdict, 1 negative verdict, 2 bad input,
/// 3 internal disagreement.
#[derive(Parser)]
#[command(name = "vital", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report vitality, obstruction-freeness, and family embeddability
    Check {
        file: PathBuf,
        /// Largest vertex count the exponential vitality oracle will attempt
        #[arg(long, default_value_t = 16)]
        oracle_cap: usize,
        /// Machine-readable verdict on stdout
        #[arg(long)]
        json: bool,
        /// Suppress the human-readable verdict
        #[arg(long)]
        quiet: bool,
        /// Write a Graphviz rendering here
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Write the family member of the given index
    Generate {
        n: u32,
        /// Output file; stdout when omitted
        out: Option<PathBuf>,
        /// Write a Graphviz rendering here
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Certify the input as a linkage minor of a family member
    Embed {
        file: PathBuf,
        /// Certificate file; stdout when omitted
        out: Option<PathBuf>,
        /// Suppress the summary line
        #[arg(long)]
        quiet: bool,
    },
    /// Exact pathwidth of the underlying graph
    Pathwidth {
        file: PathBuf,
        /// Largest vertex count the exact solver will attempt
        #[arg(long, default_value_t = 16)]
        oracle_cap: usize,
        /// Width plus the optimal bags on stdout
        #[arg(long)]
        json: bool,
    },
    /// Split the rungs into a non-crossing block and a reverse-non-crossing block
    Partition {
        file: PathBuf,
        /// Largest vertex count the search will attempt
        #[arg(long, default_value_t = 16)]
        oracle_cap: usize,
        /// Blocks as name pairs on stdout
        #[arg(long)]
        json: bool,
    },
    /// Sample a random linkage minor of a family member
    Random {
        n: u32,
        /// Survival probability for each rung and path edge
        density: f64,
        /// Output file; stdout when omitted
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write a Graphviz rendering here
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { file, oracle_cap, json, quiet, dot } => {
            command_check(&file, &CheckOpts { oracle_cap, json, quiet, dot })
        }
        Command::Generate { n, out, dot } => {
            command_generate(n, out.as_deref(), dot.as_deref())
        }
        Command::Embed { file, out, quiet } => command_embed(&file, out.as_deref(), quiet),
        Command::Pathwidth { file, oracle_cap, json } => {
            command_pathwidth(&file, oracle_cap, json)
        }
        Command::Partition { file, oracle_cap, json } => {
            command_partition(&file, oracle_cap, json)
        }
        Command::Random { n, density, out, seed, dot } => {
            command_random(n, density, seed, out.as_deref(), dot.as_deref())
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e @ CommandError::Input(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(e @ CommandError::Internal(_)) => {
            eprintln!("internal error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
