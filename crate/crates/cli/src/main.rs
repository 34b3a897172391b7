use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dyer_cli::commands::{self, Outcome};
use dyer_core::oracle::DEFAULT_MAX_COSETS;

/// Classify Dyer groups from their labelled graphs.
#[derive(Parser)]
#[command(name = "dyer", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a .dyg file describes a valid Dyer graph.
    Validate { file: PathBuf },
    /// Report evenness, quasi-perfectness, virtual freeness and more.
    Classify {
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Cross-check with literal group computation.
        #[arg(long)]
        oracle: bool,
    },
    /// Write the even quotient graph as a .dyg document.
    Quotient {
        file: PathBuf,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print an indecomposability witness or the join factors.
    Witness { file: PathBuf },
    /// Run the oracle: abelianization, derived subgroup, coset enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Generate a random Dyer graph.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        /// Comma-separated vertex orders, e.g. 2,3,inf.
        #[arg(long, default_value = "2,3,4,inf")]
        f_pool: String,
        /// Comma-separated edge labels.
        #[arg(long, default_value = "2,3,4,5,6")]
        m_pool: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Validate { file } => commands::validate(&file),
        Command::Classify { file, json, oracle } => commands::classify(&file, json, oracle),
        Command::Quotient { file, output } => commands::quotient(&file, output.as_deref()),
        Command::Witness { file } => commands::witness(&file),
        Command::Oracle { file, max_cosets } => commands::oracle(&file, max_cosets),
        Command::Gen { vertices, seed, edge_prob, f_pool, m_pool } => {
            commands::gen(vertices, seed, edge_prob, &f_pool, &m_pool)
        }
    };
    match outcome {
        Outcome::Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Outcome::Invalid(message) => {
            eprintln!("{message}");
            ExitCode::from(1)
        }
        Outcome::Usage(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
