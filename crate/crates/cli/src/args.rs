//! Command-line arguments.

use std::path::PathBuf;

use banach_core::{ConstantKind, NormSpec, Relation, SearchOpts, TGrid};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "banach", version, about = "Geometric constants of two-dimensional normed planes")]
pub struct Cli {
    /// Worker threads for the searches (default: all cores).
    #[arg(long, global = true, env = "BANACH_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate one constant.
    Constant(ConstantArgs),
    /// Estimate a t-dependent constant on a grid of t values.
    Sweep(SweepArgs),
    /// Check the known inequalities between the constants.
    Verify(VerifyArgs),
    /// Test an orthogonality relation between two vectors.
    Orth(OrthArgs),
    /// Estimate the modulus of convexity.
    Delta(DeltaArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Grid directions per half turn.
    #[arg(long, default_value_t = SearchOpts::default().grid_n)]
    pub grid_n: usize,
    /// Golden-section iterations per refinement stage.
    #[arg(long, default_value_t = SearchOpts::default().refine_iters)]
    pub refine_iters: usize,
    /// Tolerance on the Birkhoff defect of reported witnesses.
    #[arg(long, default_value_t = SearchOpts::default().tol)]
    pub tol: f64,
    /// Smallest t of the inner t grid (BR, F).
    #[arg(long, default_value_t = TGrid::default().min)]
    pub t_grid_min: f64,
    /// Largest t of the inner t grid (BR, F).
    #[arg(long, default_value_t = TGrid::default().max)]
    pub t_grid_max: f64,
    /// Points of the inner t grid (BR, F).
    #[arg(long, default_value_t = TGrid::default().points)]
    pub t_grid_points: usize,
}

impl SearchArgs {
    pub fn opts(&self) -> SearchOpts {
        SearchOpts {
            grid_n: self.grid_n,
            refine_iters: self.refine_iters,
            t_grid: TGrid { min: self.t_grid_min, max: self.t_grid_max, points: self.t_grid_points },
            tol: self.tol,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Also write the output to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConstantArgs {
    /// Constant name: atb, dtb, a2b, jb, j, a2, aprime, dprime, d_inf, br, skewness, cnjb, f, modulus.
    #[arg(long)]
    pub name: String,
    /// Norm spec, e.g. lp:2, lp:inf, linf-l1, truncated, hexagon:0,1;1,0.
    #[arg(long)]
    pub norm: String,
    /// Parameter t of atb, dtb and aprime.
    #[arg(long)]
    pub t: Option<f64>,
    /// Distance ε of the modulus of convexity.
    #[arg(long)]
    pub eps: Option<f64>,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// t-dependent constant: atb, dtb or aprime.
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub norm: String,
    /// Smallest t.
    #[arg(long)]
    pub t_min: f64,
    /// Largest t.
    #[arg(long)]
    pub t_max: f64,
    /// Number of t values.
    #[arg(long)]
    pub steps: usize,
    /// Space the t values logarithmically.
    #[arg(long)]
    pub log: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Atb,
    Dtb,
    Radon,
    Lemmas,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Norm to check; without it the built-in battery is used.
    #[arg(long)]
    pub norm: Option<String>,
    /// Values of t (repeatable; default 0.25, 0.5, 1, 2, 4).
    #[arg(long)]
    pub t: Vec<f64>,
    /// Seeded random polygon norms added to the built-in battery.
    #[arg(long, default_value_t = 0)]
    pub random_polygons: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Samples per lemma family.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct OrthArgs {
    /// birkhoff, isosceles, skew:<t> or roberts.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub norm: String,
    /// First vector as a,b.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Second vector as c,d.
    #[arg(long, allow_hyphen_values = true)]
    pub y: String,
    /// Acceptance tolerance on the defect.
    #[arg(long, default_value_t = banach_core::orthogonality::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[arg(long)]
    pub norm: String,
    /// Distance ε ∈ [0, 2].
    #[arg(long)]
    pub eps: f64,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

/// Parsed values shared by the commands.
pub fn parse_norm(s: &str) -> banach_core::Result<NormSpec> {
    s.parse()
}

pub fn parse_kind(name: &str, t: Option<f64>, eps: Option<f64>) -> banach_core::Result<ConstantKind> {
    ConstantKind::from_parts(name, t, eps)
}

pub fn parse_relation(s: &str) -> banach_core::Result<Relation> {
    s.parse()
}
