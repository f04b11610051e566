use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod bench;
mod commands;
mod io;

use io::Failure;

/// Complementary polynomials on the unit circle.
#[derive(Parser, Debug)]
#[command(name = "qspc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the canonical complement Q of a polynomial P
    Complement(ComplementArgs),
    /// Report the complementarity error of a pair (P, Q)
    Metrics(MetricsArgs),
    /// Emit a test polynomial from one of the built-in families
    Generate(GenerateArgs),
    /// Convert between Chebyshev, Laurent and circle coefficient files
    Convert(ConvertArgs),
    /// Print the grid size guaranteeing a coefficient accuracy
    RequiredN(RequiredNArgs),
    /// Sweep grid sizes and write loss/runtime rows as CSV
    Bench(BenchArgs),
    /// Compare the FFT construction against root factorization
    OracleCheck(OracleCheckArgs),
}

#[derive(Args, Debug)]
struct ComplementArgs {
    /// Input coefficient file (monomial basis)
    input: PathBuf,
    /// Known bound |P| <= 1 - delta; checked against the grid norm
    #[arg(long, requires = "n")]
    delta: Option<f64>,
    /// FFT grid size
    #[arg(long)]
    n: Option<usize>,
    /// Target sup-norm error for the downscaled variant
    #[arg(long, conflicts_with_all = ["n", "delta", "auto"])]
    eps: Option<f64>,
    /// Double N until the loss reaches --target
    #[arg(long, requires = "target", conflicts_with = "n")]
    auto: bool,
    #[arg(long)]
    target: Option<f64>,
    /// Upper limit on N for --auto
    #[arg(long, default_value_t = 1 << 24)]
    max_n: usize,
    /// Fail on grid points with 1 - |P|^2 <= 0 instead of clamping them
    #[arg(long)]
    strict: bool,
    #[arg(long, default_value_t = 1e-300)]
    clamp_floor: f64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MetricsArgs {
    p: PathBuf,
    q: PathBuf,
    #[arg(long, default_value_t = 16)]
    oversample: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Random,
    Hamiltonian,
    Eigfilter,
    Signum,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Degree (random)
    #[arg(long)]
    d: Option<String>,
    /// Distance of the sup norm below 1 (random)
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Evolution time (hamiltonian)
    #[arg(long)]
    tau: Option<f64>,
    /// Approximation error (hamiltonian, signum)
    #[arg(long)]
    eps: Option<f64>,
    /// Gap half-width (eigfilter, signum)
    #[arg(long)]
    a: Option<f64>,
    /// Chebyshev order (eigfilter)
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum From {
    Cheb,
    Laurent,
    Circle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum To {
    Circle,
    Laurent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Full,
    Parity,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    from: From,
    #[arg(long, value_enum, default_value = "circle")]
    to: To,
    #[arg(long, value_enum, default_value = "full")]
    mode: Mode,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RequiredNArgs {
    #[arg(long)]
    eps: f64,
    #[arg(long)]
    delta: f64,
    #[arg(long)]
    d: usize,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n_from: usize,
    #[arg(long)]
    n_to: usize,
    /// Ratio between consecutive grid sizes
    #[arg(long, default_value_t = 2.0)]
    n_factor: f64,
    /// Write 0 for runtimes so repeated runs are byte-identical
    #[arg(long)]
    no_timing: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleCheckArgs {
    /// Comma-separated degrees
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6,7,8")]
    d: Vec<usize>,
    #[arg(long, default_value_t = 0.2)]
    delta: f64,
    /// Number of seeds per degree
    #[arg(long, default_value_t = 50)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed_base: u64,
    #[arg(long, default_value_t = 1e-12)]
    target: f64,
    /// Maximum allowed coefficient difference
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("QSPC_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("QSPC_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build_global()
        .map_err(|e| Failure::input(format!("cannot configure thread pool: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    match cli.command {
        Command::Complement(args) => commands::complement(args),
        Command::Metrics(args) => commands::metrics(args),
        Command::Generate(args) => commands::generate(args),
        Command::Convert(args) => commands::convert(args),
        Command::RequiredN(args) => commands::required_n(args),
        Command::Bench(args) => bench::run(args),
        Command::OracleCheck(args) => commands::oracle_check(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { io::EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
