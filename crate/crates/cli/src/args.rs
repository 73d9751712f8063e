use clap::{Args, Parser, Subcommand, ValueEnum};
use virasoro_hc::arith::{parse_rational, Rational};
use virasoro_hc::lie::{AlgebraName, CocycleName};
use virasoro_hc::weight::ModuleKind;

#[derive(Debug, Parser)]
#[command(
    name = "vhc",
    version,
    about = "Exact checks for Virasoro-type algebras and their weight modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,

    /// Seed for the randomized sweeps.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn algebra(s: &str) -> Result<AlgebraName, String> {
    s.parse()
        .map_err(|e: virasoro_hc::lie::LieError| e.to_string())
}

fn cocycle(s: &str) -> Result<CocycleName, String> {
    s.parse()
        .map_err(|e: virasoro_hc::lie::LieError| e.to_string())
}

fn module_kind(s: &str) -> Result<ModuleKind, String> {
    s.parse()
        .map_err(|e: virasoro_hc::weight::ModuleError| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Antisymmetry and Jacobi on a degree window.
    Jacobi(AlgebraArgs),
    /// The 2-cocycle identity for one of the listed cocycles.
    Cocycle(CocycleArgs),
    /// The classification determinant and its printed factorization.
    Delta(DeltaArgs),
    /// Scan a rational grid for the (ϱ, b, b') that admit solutions.
    Classify(ClassifyArgs),
    /// Module axiom, and optionally window cyclicity, for one weight module.
    ModuleCheck(ModuleCheckArgs),
    /// Window cyclicity against the simplicity criterion.
    Cyclicity(CyclicityArgs),
    /// Run the whole reproduction suite.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArgs {
    /// Vir, W, SV or D.
    #[arg(long, value_parser = algebra)]
    pub algebra: AlgebraName,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub rho: Option<Rational>,
    #[arg(long, value_parser = rational, default_value = "0")]
    pub s: Rational,
    #[arg(long, default_value_t = 5)]
    pub window: i64,
}

#[derive(Debug, Clone, Args)]
pub struct CocycleArgs {
    /// gamma0, gamma01, gamma02 or gamma11.
    #[arg(long, value_parser = cocycle)]
    pub cocycle: CocycleName,
    #[arg(long, value_parser = algebra, default_value = "W")]
    pub algebra: AlgebraName,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub rho: Option<Rational>,
    #[arg(long, value_parser = rational, default_value = "0")]
    pub s: Rational,
    #[arg(long, default_value_t = 8)]
    pub window: i64,
}

#[derive(Debug, Clone, Args)]
pub struct DeltaArgs {
    /// Print the canonical string of the computed determinant.
    #[arg(long)]
    pub print: bool,
    /// Compare against the printed factorization (or display, with --specialize-s0).
    #[arg(long)]
    pub check_paper: bool,
    /// Work with the b' = b specialization.
    #[arg(long)]
    pub specialize_s0: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = rational)]
    pub s: Rational,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_num: u32,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_den: u32,
    /// Compare with the printed case list.
    #[arg(long)]
    pub expect_paper: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ModuleArgs {
    /// Aab, Aa, Ba, Aabc or Aabc1c2.
    #[arg(long, value_parser = module_kind)]
    pub kind: ModuleKind,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub bp: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub c: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub c1: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub c2: Option<Rational>,
    /// ϱ of the host W(ϱ) for Aabc and Aabc1c2 (default 0).
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub rho: Option<Rational>,
}

#[derive(Debug, Clone, Args)]
pub struct ModuleCheckArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    #[arg(long, default_value_t = 4)]
    pub window: i64,
    /// Also run the window-cyclicity check on the same window.
    #[arg(long)]
    pub cyclicity: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CyclicityArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    #[arg(long, default_value_t = 6)]
    pub window: i64,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    /// Criteria to run, by number or key (comma separated); all by default.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
}
