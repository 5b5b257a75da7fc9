use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact multivariate orthogonal polynomials and their connection coefficients.
#[derive(Debug, Parser)]
#[command(name = "orthoconn", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basis polynomials on the simplex, ball or sphere.
    Basis(BasisArgs),
    /// Connection matrix between the permuted and the original simplex basis.
    Connect(ConnectArgs),
    /// Racah polynomials on the chain lattice.
    Racah(RacahArgs),
    /// Hahn polynomials on `|x| = N`.
    Hahn(HahnArgs),
    /// Krawtchouk polynomials on `|x| <= N`.
    Kraw(KrawArgs),
    /// Parity basis on the unit ball.
    Ball(GeometryArgs),
    /// Parity basis of spherical h-harmonics.
    Sphere(GeometryArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Simplex,
    Ball,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Gram,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Basis,
    Connect,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RacahVerb {
    Eval,
    Weight,
    Norm,
    Dual,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Orthogonality,
    Reconstruction,
    Inverse,
    Convolution,
    ClosedVsGram,
    SumIdentity,
    Racah,
    Hahn,
    Kraw,
    Ball,
    Disk,
    Sphere,
    #[value(name = "example-9-10")]
    Example910,
    Dimensions,
    Acceptance,
}

/// Where and how results are written.
#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Directory for artifact files; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[arg(long, value_enum, default_value = "simplex")]
    pub family: Family,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated rationals such as `1/2,0,-1/3`.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: String,
    /// Cycle notation with 1-based symbols, e.g. `(12)(34)`.
    #[arg(long)]
    pub tau: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ConnectArgs {
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: String,
    #[arg(long)]
    pub tau: String,
    #[arg(long, value_enum, default_value = "gram")]
    pub method: Method,
    /// Also emit `c-hat = sign * sqrt(...)` entries.
    #[arg(long)]
    pub normalized: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RacahArgs {
    #[arg(value_enum)]
    pub verb: RacahVerb,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long = "N")]
    pub big_n: usize,
    /// `beta_0, ..., beta_{d+1}`.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    /// Degree index, comma-separated.
    #[arg(long)]
    pub nu: Option<String>,
    /// Lattice chain `x_1 <= ... <= x_d`, comma-separated.
    #[arg(long)]
    pub x: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct HahnArgs {
    #[arg(value_enum)]
    pub verb: Verb,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long = "N")]
    pub big_n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: String,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long)]
    pub tau: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    pub method: Method,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct KrawArgs {
    #[arg(value_enum)]
    pub verb: Verb,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long = "N")]
    pub big_n: usize,
    /// `rho_1, ..., rho_d` with every entry positive and `|rho| < 1`.
    #[arg(long)]
    pub rho: String,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long)]
    pub tau: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    pub method: Method,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct GeometryArgs {
    #[arg(value_enum)]
    pub verb: Verb,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: String,
    #[arg(long)]
    pub tau: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    pub method: Method,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    /// Parameters; sampled from `--seed` when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    #[arg(long)]
    pub tau: Option<String>,
    #[arg(long)]
    pub tau2: Option<String>,
    /// Disk parameter for `--suite disk`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Single acceptance criterion, 1 to 10.
    #[arg(long)]
    pub criterion: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}
