use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

/// Subshifts of finite type: constructions, bounded decision procedures and
/// reductions.
///
/// Verdict commands exit with 0 for a certified yes, 1 for a certified no
/// and 3 when the budget ran out.
#[derive(Debug, Parser)]
#[command(name = "sftkit", version)]
pub struct Cli {
    /// Print verdicts, counts and listings as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wang tile sets.
    #[command(subcommand)]
    Wang(WangCommand),
    /// Presentation of the direct product.
    Product { a: PathBuf, b: PathBuf },
    /// Presentation of the disjoint union.
    Union { a: PathBuf, b: PathBuf },
    /// Whether the SFT has a constant configuration.
    FixedPoints { file: PathBuf },
    /// Certify emptiness with balls of radius up to R.
    CheckEmpty {
        file: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// Search tori of period up to N for a periodic configuration.
    FindPeriodic {
        file: PathBuf,
        #[arg(long)]
        max_period: usize,
    },
    /// Emptiness certificate, then periodic search.
    DecideEmpty {
        file: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        max_period: usize,
    },
    /// Bounded membership of a pattern in the language.
    LangMember {
        file: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        max_period: Option<usize>,
    },
    /// Bounded test that X is contained in the candidate SFT.
    Contains {
        candidate: PathBuf,
        x: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        max_period: Option<usize>,
    },
    /// Exact number of locally admissible patterns on the box of side N.
    Count {
        file: PathBuf,
        #[arg(long = "box", value_name = "N")]
        side: usize,
    },
    /// ln(count) / N^d for the box of side N.
    EntropyBound {
        file: PathBuf,
        #[arg(long = "box", value_name = "N")]
        side: usize,
    },
    /// Reductions from emptiness.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Built-in witness pairs.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Report forbidden patterns that can never appear.
    Lint { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum WangCommand {
    /// Compile a tile set to a Z^2 SFT.
    Compile { tiles: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// X₊ ⊔ (input × X₋), from a catalog witness or an explicit pair.
    #[command(group(ArgGroup::new("pair").required(true).args(["witness", "plus"])))]
    Berger {
        input: PathBuf,
        #[arg(long)]
        witness: Option<String>,
        /// Parameter X of the parameterized witnesses.
        #[arg(long, requires = "witness")]
        param_x: Option<PathBuf>,
        #[arg(long, requires = "minus")]
        plus: Option<PathBuf>,
        #[arg(long, requires = "plus")]
        minus: Option<PathBuf>,
    },
    /// X₀ ⊔ (Y₀ × input).
    Invariant {
        input: PathBuf,
        #[arg(long)]
        x0: PathBuf,
        #[arg(long)]
        y0: PathBuf,
    },
    /// Sofic presentation over plus.base × input.
    Sofic {
        input: PathBuf,
        #[arg(long)]
        plus: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum WitnessCommand {
    /// List the catalog.
    List,
}
