//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::BetaVariant;

#[derive(Debug, Parser)]
#[command(name = "blendifs", version, about = "Certified discrete blends of IFS attractors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discrete attractor of one system (the constant recipe).
    Attractor(AttractorArgs),
    /// Blend the systems by a recipe.
    Blend(BlendArgs),
    /// Distances, coefficients and covering radii.
    Metrics(MetricsArgs),
    /// Print the systems, their contraction factors and the grid.
    Info(InfoArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// JSON run configuration.
    #[arg(long)]
    pub config: PathBuf,
    /// Grid resolution M (overrides the config).
    #[arg(long)]
    pub resolution: Option<u32>,
    /// Output directory (overrides the config; default `out`).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; results do not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct ImageArgs {
    #[arg(long)]
    pub width: Option<u32>,
    #[arg(long)]
    pub height: Option<u32>,
    /// Put the smallest y on the top image row.
    #[arg(long)]
    pub y_down: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ThetaArgs {
    /// Comma-separated 1-based system indices, outermost first, e.g. `1,1,2`.
    #[arg(long, conflicts_with_all = ["seed", "length"])]
    pub theta: Option<String>,
    /// Seed for a random recipe (defaults to the config seed).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Length of a random recipe.
    #[arg(long)]
    pub length: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct AttractorArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// System name (or 1-based index).
    #[arg(long = "ifs")]
    pub ifs: String,
    /// Number of operator applications.
    #[arg(long, conflicts_with = "delta")]
    pub k: Option<usize>,
    /// Target certified error; picks k and, unless given, the resolution.
    #[arg(long)]
    pub delta: Option<f64>,
    #[command(flatten)]
    pub image: ImageArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BlendArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub theta: ThetaArgs,
    /// Seed set Z as a cell list (default: the full grid).
    #[arg(long)]
    pub z: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = BetaVariant::Both)]
    pub variant: BetaVariant,
    /// File stem for the outputs.
    #[arg(long, default_value = "blend")]
    pub name: String,
    #[command(flatten)]
    pub image: ImageArgs,
}

#[derive(Debug, Clone, Args)]
pub struct MetricsArgs {
    #[command(subcommand)]
    pub metric: Metric,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Metric {
    /// Pairwise Hausdorff distances between discrete attractors.
    Hausdorff(HausdorffArgs),
    /// Blending coefficients of a recipe.
    Beta(BetaArgs),
    /// Self-dissimilarity of the attractors.
    Delta(DeltaArgs),
    /// Covering radii around the attractors.
    Envelope(EnvelopeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct HausdorffArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Operator applications per attractor.
    #[arg(long, default_value_t = 30)]
    pub k: usize,
    /// Restrict to one pair, e.g. `R1,R2` (default: all pairs).
    #[arg(long)]
    pub pair: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct BetaArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub theta: ThetaArgs,
    #[arg(long, value_enum, default_value_t = BetaVariant::Both)]
    pub variant: BetaVariant,
}

#[derive(Debug, Clone, Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 30)]
    pub k: usize,
    /// Only this system (default: all).
    #[arg(long)]
    pub i0: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum RadiiChoice {
    Thm31,
    Selfmax,
    #[default]
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct EnvelopeArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 30)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = RadiiChoice::Both)]
    pub radii: RadiiChoice,
}

#[derive(Debug, Clone, Args)]
pub struct InfoArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub resolution: Option<u32>,
}
