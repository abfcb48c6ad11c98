use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathhom_core::general::DEFAULT_GUARD_LIMIT;
use pathhom_core::linalg::parse_rational;
use pathhom_core::sampling::{base_sizes, WeightDistribution};
use pathhom_core::Rational;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "pathhom",
    version,
    about = "Path homology of layered directed graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti numbers of graphs read from edge-list files.
    Betti(BettiArgs),
    /// Random subgraphs of a fully connected base graph, written as files.
    Sample(SampleArgs),
    /// Runs the recursive and the general engine side by side.
    Compare(CompareArgs),
    /// Full-depth Betti number along the edge-weight filtration.
    Persist(PersistArgs),
    /// Longest-path subgraph, trimming, components or layer inference.
    Preprocess(PreprocessArgs),
}

/// Which homology degree to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim {
    /// `H_L` of a stratified graph, by the recursive engine.
    Full,
    /// `H_ℓ` of a DAG with longest path length `ℓ`.
    Max,
    /// `H_p` by the general engine.
    P(usize),
}

impl FromStr for Dim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Dim::Full),
            "max" => Ok(Dim::Max),
            _ => s
                .parse()
                .map(Dim::P)
                .map_err(|_| format!("expected `full`, `max` or a degree, got `{s}`")),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Full => f.write_str("full"),
            Dim::Max => f.write_str("max"),
            Dim::P(p) => write!(f, "{p}"),
        }
    }
}

fn parse_rho(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Edge-list files.
    pub inputs: Vec<PathBuf>,
    /// Layers file, once per input in the same order. Without it layers are
    /// inferred from longest-path depth.
    #[arg(long)]
    pub layers: Vec<PathBuf>,
}

impl InputArgs {
    pub fn paired(&self) -> Result<Vec<(PathBuf, Option<PathBuf>)>, CliError> {
        if !self.layers.is_empty() && self.layers.len() != self.inputs.len() {
            return Err(CliError::Validation(format!(
                "{} layers files for {} inputs",
                self.layers.len(),
                self.inputs.len()
            )));
        }
        Ok(self
            .inputs
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), self.layers.get(i).cloned()))
            .collect())
    }
}

#[derive(Debug, Clone, Args)]
pub struct ExecArgs {
    /// Worker threads for batches; output does not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BaseArgs {
    /// Layer sizes of the fully connected base graph, e.g. `5,8,8,8`.
    #[arg(long, value_delimiter = ',', conflicts_with = "base")]
    pub sizes: Vec<usize>,
    /// Benchmark base graph 1 to 5.
    #[arg(long)]
    pub base: Option<usize>,
}

impl BaseArgs {
    pub fn resolve(&self) -> Result<Option<Vec<usize>>, CliError> {
        match self.base {
            Some(b) => base_sizes(b)
                .map(Some)
                .ok_or_else(|| CliError::Validation(format!("no base graph {b}"))),
            None if self.sizes.is_empty() => Ok(None),
            None => Ok(Some(self.sizes.clone())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Weights {
    Uniform,
    Beta22,
}

impl Weights {
    pub fn distribution(self) -> WeightDistribution {
        match self {
            Weights::Uniform => WeightDistribution::Uniform,
            Weights::Beta22 => WeightDistribution::Beta22,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Weights::Uniform => "uniform",
            Weights::Beta22 => "beta22",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BettiArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// `full`, `max` or an explicit degree.
    #[arg(long, default_value = "full")]
    pub dim: Dim,
    /// Include representative cycles.
    #[arg(long)]
    pub track: bool,
    /// Largest number of allowed paths the general engine may build.
    #[arg(long, default_value_t = DEFAULT_GUARD_LIMIT as u64)]
    pub guard: u64,
    /// Report wall time per input.
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub exec: ExecArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Fraction of edges kept per adjacent layer pair, in (0, 1].
    #[arg(long, value_parser = parse_rho)]
    pub rho: Rational,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Attach random edge weights.
    #[arg(long)]
    pub weights: Option<Weights>,
    /// Directory for `sample_NNNN.edges` and `sample_NNNN.layers`.
    #[arg(long)]
    pub out_dir: PathBuf,
    #[command(flatten)]
    pub exec: ExecArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Sample the inputs instead of reading them.
    #[command(flatten)]
    pub base: BaseArgs,
    #[arg(long, value_parser = parse_rho)]
    pub rho: Option<Rational>,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `full` or `max`.
    #[arg(long, default_value = "full")]
    pub dim: Dim,
    #[arg(long, default_value_t = DEFAULT_GUARD_LIMIT as u64)]
    pub guard: u64,
    #[arg(long)]
    pub timings: bool,
    /// Offsets the recursive result of the first input by one.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
    #[command(flatten)]
    pub exec: ExecArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveFormat {
    Csv,
    Json,
    /// Whitespace-separated columns with decimal thresholds, for plotting.
    Dat,
}

#[derive(Debug, Clone, Args)]
pub struct PersistArgs {
    /// Weighted edge-list file.
    pub input: PathBuf,
    #[arg(long)]
    pub layers: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CurveFormat::Csv)]
    pub format: CurveFormat,
    /// Add the whole graph's Betti number below the smallest weight.
    #[arg(long)]
    pub baseline: bool,
    /// Write the curve here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    LongestSubgraph,
    Trim,
    TrimConnected,
    Components,
    InferLayers,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::LongestSubgraph => "longest-subgraph",
            Op::Trim => "trim",
            Op::TrimConnected => "trim-connected",
            Op::Components => "components",
            Op::InferLayers => "infer-layers",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct PreprocessArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub layers: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub op: Op,
    /// Output path without extension; `.edges` and `.layers` are appended.
    #[arg(long)]
    pub out: PathBuf,
    /// Write the summary here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
