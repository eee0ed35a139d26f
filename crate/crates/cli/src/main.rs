mod ideal;
mod input;
mod poset;
mod tree;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;


#[derive(Parser)]
#[command(name = "boric", version, about = "Boron trees, ideal systems and weighted-object posets")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Rerun the query through the brute-force path and check agreement.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Largest object size to consider.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Boron trees: induced subtrees, isomorphism, embeddings
    #[command(subcommand)]
    Tree(tree::TreeCommand),
    /// Ideal systems given by a spec file
    #[command(subcommand)]
    Ideal(ideal::IdealCommand),
    /// Orders on words, vectors and weighted objects
    #[command(subcommand)]
    Poset(poset::PosetCommand),
}

/// What a command produced: text for humans, a JSON value, and whether the
/// verdict was positive (exit 0) or negative (exit 1).
pub struct Report {
    pub text: String,
    pub json: Value,
    pub verdict: bool,
}

impl Report {
    pub fn ok(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            verdict: true,
        }
    }

    pub fn verdict(verdict: bool, text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
            verdict,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Tree(c) => tree::run(c, &cli.global),
        Command::Ideal(c) => ideal::run(c, &cli.global),
        Command::Poset(c) => poset::run(c, &cli.global),
    };
    match result {
        Ok(report) => {
            let out = match cli.global.format {
                Format::Text => report.text.trim_end().to_string(),
                Format::Json => serde_json::to_string_pretty(&report.json).unwrap(),
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            if !out.is_empty() {
                let _ = writeln!(std::io::stdout(), "{out}");
            }
            ExitCode::from(if report.verdict { 0 } else { 1 })
        }
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
