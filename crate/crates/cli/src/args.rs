use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nmsa_core::Criterion;
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "nmsa",
    version,
    about = "Exact and approximate multiple sequence alignment under SP and normalized criteria"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Align the sequences of a FASTA file.
    Align(AlignArgs),
    /// Score a given alignment under every applicable criterion.
    Score(ScoreArgs),
    /// Report matrix class membership and violated conditions.
    Classify(ClassifyArgs),
    /// Decide whether an alignment with given induced pair widths exists.
    Eail(EailArgs),
    /// Brute-force optimum over every alignment.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// FASTA file; record order is sequence order.
    #[arg(long)]
    pub input: PathBuf,
    /// Scoring matrix (TSV).
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Per-pair matrices: lines of `h i path`. Unlisted pairs use --matrix.
    #[arg(long)]
    pub matrix_array: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub output: Format,
    /// Decimal places in rendered values (exact num/den is always given).
    #[arg(long, default_value_t = 2)]
    pub decimals: u32,
}

#[derive(Debug, Args)]
pub struct AlignArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub criterion: CriterionArg,
    #[arg(long, value_enum, default_value_t = Method::Exact)]
    pub method: Method,
    /// Refuse exact runs whose estimated table size exceeds this.
    #[arg(long, default_value_t = nmsa_core::exact::DEFAULT_MAX_CELLS)]
    pub max_cells: u128,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Alignment: aligned FASTA, `#k width` text, or a JSON result document.
    #[arg(long)]
    pub alignment: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EailArgs {
    /// Sequence lengths, comma separated.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Induced pair widths in pair order (1,2), (1,3), .., (k-1,k).
    #[arg(long = "L", value_delimiter = ',', required = true)]
    pub lengths: Vec<usize>,
    #[arg(long, default_value_t = nmsa_core::exact::DEFAULT_MAX_CELLS)]
    pub max_cells: u128,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub criterion: CriterionArg,
    #[arg(long, default_value_t = 10_000_000)]
    pub max_alignments: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    A,
    N,
    Sp,
    V1,
    V2,
    V3,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Criterion {
        match c {
            CriterionArg::A => Criterion::A,
            CriterionArg::N => Criterion::N,
            CriterionArg::Sp => Criterion::Sp,
            CriterionArg::V1 => Criterion::V1,
            CriterionArg::V2 => Criterion::V2,
            CriterionArg::V3 => Criterion::V3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Star,
    Heuristic,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Star => "star",
            Method::Heuristic => "heuristic",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}
