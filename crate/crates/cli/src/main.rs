//! `adica`: morphisms, S-adic languages and Bratteli–Vershik diagrams from
//! the command line.
//!
//! Exit codes: 0 success, 1 a mathematical hypothesis was rejected, 2 bad
//! input (usage, parse or I/O errors).

mod bv;
mod build;
mod error;
mod io;
mod lang;
mod morphism;
mod s5;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser)]
#[command(name = "adica", version, about = "Morphisms, S-adic languages and Bratteli-Vershik diagrams")]
struct Cli {
    /// Machine-readable output (JSON with a "schema" field).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on a single morphism.
    #[command(subcommand)]
    Morphism(MorphismCmd),
    /// Factor language and complexity of a directive sequence.
    Lang(LangArgs),
    /// Bratteli diagrams read directly from a directive.
    #[command(subcommand)]
    Bv(BvCmd),
    /// Checked Bratteli-Vershik representation with a rank report.
    Build(BuildArgs),
    /// The five-morphism set {D, G, E_ab, E_bc, M}.
    #[command(subcommand)]
    S5(S5Cmd),
}

#[derive(Subcommand)]
pub enum MorphismCmd {
    /// Apply a morphism to a word.
    Apply {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Properness, incidence matrix, primitivity and conjugates.
    Info {
        #[arg(long)]
        file: PathBuf,
    },
    /// outer ∘ inner, as a .mor file.
    Compose {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
    },
    /// k-th power of an endomorphism, as a .mor file.
    Power {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Left or right conjugate, as a .mor file.
    Conjugate {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// The proper products στ and τσ of a one-sided proper morphism.
    Products {
        #[arg(long)]
        file: PathBuf,
    },
    /// Check σ(w)·l = l·τ(w) on all words up to --max-len.
    CheckConjugacy {
        /// Morphism to check; without it, --random seeded morphisms are drawn.
        #[arg(long, conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Number of random left-proper morphisms over 2-4 letters.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = adica_core::words::random::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Args)]
pub struct LangArgs {
    #[arg(long)]
    directive: PathBuf,
    #[arg(long)]
    max_len: usize,
    /// Report p(1..=N); defaults to --max-len.
    #[arg(long)]
    complexity: Option<usize>,
    /// Also check that every factor of this length occurs in every factor
    /// of length --max-len.
    #[arg(long)]
    recurrence: Option<usize>,
}

#[derive(Subcommand)]
pub enum BvCmd {
    /// Build the diagram whose levels read the directive's morphisms.
    Build {
        #[arg(long)]
        directive: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Write Graphviz output here (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Vershik orbit coding from the minimal path.
    Orbit {
        #[arg(long)]
        directive: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        steps: usize,
        /// Continue from the minimal path after the maximal one.
        #[arg(long)]
        wrap: bool,
    },
    /// Simplicity and uniqueness of extremal paths.
    Check {
        #[arg(long)]
        directive: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        extrema: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Strict,
    Alt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
pub struct BuildArgs {
    #[arg(long)]
    directive: PathBuf,
    /// Morphism levels to build; defaults to min(6, entries - 1).
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, value_enum, default_value = "strict")]
    mode: ModeArg,
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,
    /// Word length for the injectivity check.
    #[arg(long, default_value_t = 8)]
    scale: usize,
    /// Orbit length for the coding-versus-language comparison.
    #[arg(long, default_value_t = 200)]
    steps: usize,
    /// Factor length for the coding-versus-language comparison.
    #[arg(long, default_value_t = 10)]
    coding_len: usize,
}

#[derive(Subcommand)]
pub enum S5Cmd {
    /// Check the block conditions for the file's marks, or search for marks.
    Validate {
        file: PathBuf,
        /// Search for marks with blocks of length at most W.
        #[arg(long, value_name = "W")]
        search_marks: Option<usize>,
    },
    /// Complexity differences p(n+1) - p(n) for n up to --max-n.
    Harness {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
    /// Rank-3 diagram from the telescoped blocks.
    Build {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "W")]
        search_marks: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let json = cli.json;
    match cli.command {
        Command::Morphism(cmd) => morphism::run(cmd, json),
        Command::Lang(args) => lang::run(args, json),
        Command::Bv(cmd) => bv::run(cmd, json),
        Command::Build(args) => build::run(args, json),
        Command::S5(cmd) => s5::run(cmd, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
