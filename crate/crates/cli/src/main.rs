//! `boxvol`: exact volumes of the pieces of a box cut along `x_i = x_j`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod render;

use std::process::ExitCode;

use boxvol::oracle::{self, VerifyOptions};
use boxvol::volume::{self, ClassifyOptions};
use boxvol::{Permutation, Weights};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "boxvol",
    version,
    about = "Exact volumes of the pieces of a box cut along the planes x_i = x_j"
)]
struct Cli {
    /// Output format; json and csv are stable, table is for people.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads for parallel stages and Monte Carlo sampling.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Raise the size limit for exhaustive commands.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Seed for `simulate`.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ψ(π), λ^max(π), the diagram of π and 132-avoidance.
    Psi {
        /// One-line notation: `42531` or `4 2 5 3 1`.
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        /// Also draw the permutation matrix and diagram (table format only).
        #[arg(long)]
        ascii: bool,
    },
    /// Vol(C_π) in both bases, and its exact value for given weights.
    Volume {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        /// Strictly increasing positive weights, e.g. `1,3/2,2.5`.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Group S_n into equal-volume classes.
    Classify {
        n: usize,
        /// Recompute every volume and check it against its class.
        #[arg(long)]
        paranoid: bool,
        /// Omit member lists of classes larger than this.
        #[arg(long)]
        members_threshold: Option<u64>,
    },
    /// Check that equal volumes and equal ψ-images partition S_n identically.
    Verify { n: usize },
    /// Estimate P(E_π) by sampling x_i = W_i·X_i.
    Simulate {
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
    },
    /// The Catalan number C_n.
    Catalan { n: usize },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<boxvol::Error> for Failure {
    fn from(e: boxvol::Error) -> Self {
        match e {
            boxvol::Error::ClassInvariant(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn parse_perm(tokens: &[String]) -> Result<Permutation, Failure> {
    Ok(tokens.join(" ").parse::<Permutation>()?)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if let Some(k) = cli.threads {
        if k == 0 {
            return Err(Failure::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let format = cli.format;
    match &cli.command {
        Command::Psi { perm, ascii } => {
            let p = parse_perm(perm)?;
            render::psi(&p, format, *ascii)
        }
        Command::Volume { perm, weights } => {
            let p = parse_perm(perm)?;
            let w = weights.as_deref().map(Weights::parse_list).transpose()?;
            render::volume(&p, w.as_ref(), format)
        }
        Command::Classify {
            n,
            paranoid,
            members_threshold,
        } => {
            let opts = ClassifyOptions {
                max_n: cli.max_n.unwrap_or(boxvol::DEFAULT_MAX_N),
                paranoid: *paranoid,
                retain_members: *n <= 9,
            };
            if *paranoid && *n > 8 {
                eprintln!("warning: paranoid classification of n = {n} computes {n}! polynomials and may take a long time");
            }
            let c = volume::classify_with(*n, &opts)?;
            render::classification(&c, format, *members_threshold)
        }
        Command::Verify { n } => {
            let opts = VerifyOptions {
                max_n: cli.max_n.unwrap_or(oracle::DEFAULT_VERIFY_MAX_N),
                ..VerifyOptions::default()
            };
            if *n > 8 && *n <= opts.max_n {
                eprintln!("warning: exhaustive verification of n = {n} may take a long time");
            }
            let report = oracle::verify_theorem_with(*n, &opts)?;
            let out = render::theorem(&report, format)?;
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Verification(format!(
                    "verification failed for n = {n}"
                )))
            }
        }
        Command::Simulate {
            perm,
            weights,
            samples,
        } => {
            let p = parse_perm(perm)?;
            let w = Weights::parse_list(weights)?;
            let workers = cli.threads.unwrap_or(1);
            let report = oracle::monte_carlo_probability_with(&p, &w, *samples, cli.seed, workers)?;
            render::simulation(&report, format)
        }
        Command::Catalan { n } => render::catalan(*n, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
