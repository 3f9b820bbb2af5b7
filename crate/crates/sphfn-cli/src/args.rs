use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sphfn_core::HalfInt;

#[derive(Debug, Parser)]
#[command(name = "sphfn", version, about = "Spherical functions of SO(4), SO0(1,4) and the principal series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single function value
    Eval {
        #[command(subcommand)]
        what: Eval,
    },
    /// Sweep a kernel over an angle grid and print CSV
    Table(TableArgs),
    /// Run invariant batteries and print a JSON report
    Verify(VerifyArgs),
    /// Print the mass spectrum for n = 1..nmax as a JSON array
    Spectrum(SpectrumArgs),
    /// Synthesize a coefficient map on a grid of hyperboloid points
    Expand(ExpandArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    So4,
    So13,
    So14,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    So4First,
    LorentzFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Conv {
    Ordered,
    Combined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Eval {
    /// Kernel Z^l_{mn} of SO(4), SO0(1,3) or SO0(1,4)
    Zfn(ZfnArgs),
    /// Principal-series matrix element as a hypercomplex number
    Principal(PrincipalArgs),
    /// SO0(1,4) matrix element as a hypercomplex number
    Element(ElementArgs),
}

#[derive(Debug, Args)]
pub struct Weights {
    /// Weight l (or sigma), e.g. 2 or 3/2
    #[arg(long, visible_alias = "sigma", allow_hyphen_values = true)]
    pub l: HalfInt,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub m: HalfInt,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub n: HalfInt,
}

#[derive(Debug, Args)]
pub struct ZfnArgs {
    #[arg(long, value_enum)]
    pub group: Group,
    #[command(flatten)]
    pub w: Weights,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub theta: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub phi2: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub tau: f64,
    /// Hypergeometric form instead of the explicit sum (1-4 for so4, 1-8 for so14)
    #[arg(long)]
    pub form: Option<usize>,
    #[arg(long, value_enum, default_value = "so4-first")]
    pub order: Order,
}

#[derive(Debug, Args)]
pub struct PrincipalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub rho: f64,
    #[arg(long)]
    pub l0: HalfInt,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub m: HalfInt,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub n: HalfInt,
    /// JSON file with the ten angles; missing ones are zero
    #[arg(long)]
    pub angles: PathBuf,
    /// Use the -3/2 - i rho family
    #[arg(long)]
    pub conjugated: bool,
    #[arg(long)]
    pub form: Option<usize>,
    #[arg(long, value_enum, default_value = "ordered")]
    pub conv: Conv,
}

#[derive(Debug, Args)]
pub struct ElementArgs {
    #[command(flatten)]
    pub w: Weights,
    #[arg(long)]
    pub angles: PathBuf,
    #[arg(long, value_enum, default_value = "ordered")]
    pub conv: Conv,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub group: Group,
    #[command(flatten)]
    pub w: Weights,
    /// Points per axis; theta and phi2 span [0, pi], tau spans [tau-min, tau-max]
    #[arg(long)]
    pub grid: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub tau_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 2.0)]
    pub tau_max: f64,
    #[arg(long)]
    pub form: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// hypercomplex, liealg, so4, so14, principal, hyperboloid or all
    #[arg(long)]
    pub suite: String,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub samples: Option<usize>,
    /// JSON run configuration (tolerances, budgets, quadrature caps)
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Hydrogen,
    Antihydrogen,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub m1: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub m2: f64,
    /// Coupling e^2
    #[arg(long, allow_hyphen_values = true)]
    pub e2: f64,
    #[arg(long)]
    pub nmax: u32,
    #[arg(long, value_enum, default_value = "hydrogen")]
    pub branch: BranchArg,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// JSON array of {"sigma", "m", "n", "re", "im"}
    #[arg(long)]
    pub coeffs: PathBuf,
    /// Axes as `name=start:stop:count`, comma separated; names eps, tau,
    /// eps2, omega; omitted axes stay at 0
    #[arg(long, default_value = "")]
    pub grid: String,
    #[arg(long)]
    pub sigma_max: Option<HalfInt>,
    /// Recompute the coefficients of the synthesized function by quadrature
    /// and print them in the input format
    #[arg(long)]
    pub reproject: bool,
    #[arg(long, default_value_t = 16)]
    pub nodes: usize,
    #[arg(long, default_value_t = 12.0)]
    pub t_tau: f64,
    #[arg(long, default_value_t = 30.0)]
    pub t_exp: f64,
}
