use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod render;

use commands::{TheoremChoice, VerifyArgs};

/// Decision procedures and exhaustive theorem checks for finite ordered semigroups.
#[derive(Parser, Debug)]
#[command(name = "ordsemi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an instance file for associativity, order axioms and compatibility.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print zero, regular and nilpotent elements, kernel, Green's classes and class flags.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare one element-wise condition against the nil-extension oracle.
    Theorem {
        path: PathBuf,
        /// ne6, ne7, ne8 or ne9.
        #[arg(long)]
        which: ordsemi::Theorem,
        #[arg(long)]
        json: bool,
    },
    /// Sweep every ordered semigroup up to an order and tally agreement.
    Verify {
        #[arg(long)]
        max_order: usize,
        /// all, or one of ne6, ne7, ne8, ne9.
        #[arg(long, default_value = "all")]
        which: TheoremChoice,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Checkpoint file; resumed from when it exists, updated after every batch.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Where disagreements and anomalies are written, one JSON object per line.
        #[arg(long, default_value = "counterexamples.jsonl")]
        counterexamples: PathBuf,
        /// Skip running both nil-extension routes on every ideal.
        #[arg(long)]
        no_lemma_checks: bool,
        /// Shards evaluated between checkpoints.
        #[arg(long, default_value_t = 16, hide = true)]
        batch_shards: usize,
        #[arg(long)]
        json: bool,
        /// Include wall-clock timing in the output.
        #[arg(long)]
        timestamps: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate { path, json } => commands::validate(&path, json),
        Command::Analyze { path, json } => commands::analyze(&path, json),
        Command::Theorem { path, which, json } => commands::theorem(&path, which, json),
        Command::Verify {
            max_order,
            which,
            jobs,
            resume,
            counterexamples,
            no_lemma_checks,
            batch_shards,
            json,
            timestamps,
        } => commands::verify(&VerifyArgs {
            max_order,
            which,
            jobs,
            resume,
            counterexamples,
            lemma_checks: !no_lemma_checks,
            batch_shards,
            json,
            timestamps,
        }),
    };
    result.emit()
}
