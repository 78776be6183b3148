//! Command-line front end for p-Bell and poly-Bell computations.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or I/O errors.

mod bench;
mod commands;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polybell_core::pbell::PBellBackend;

pub use table::{Table, TableFormat, TableKind, TableRequest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Caps the size of the worker pool.
pub const THREADS_ENV: &str = "POLYBELL_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "polybell",
    version,
    about = "Exact p-Bell and poly-Bell numbers, tables and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one exact value.
    Value(ValueArgs),
    /// Emit a table of exact values as CSV or JSON.
    Table(TableArgs),
    /// Run the identity verification suite.
    Verify(VerifyArgs),
    /// Run a floating point or Monte Carlo check.
    Numeric(NumericArgs),
    /// Time the p-Bell backends on a table.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ValueKind {
    /// B_{n,p}, p >= 0
    Pbell,
    /// B_n^{(p)}, any signed p
    Polybell,
    /// The polynomial B_{n,p}(x), or its value with --x
    PbellPoly,
}

#[derive(Debug, Args)]
struct ValueArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long, value_enum, default_value = "pbell")]
    kind: ValueKind,
    #[arg(long, default_value = "ztriangle")]
    backend: PBellBackend,
    /// Compare all four backends and fail on any disagreement.
    #[arg(long)]
    cross_check: bool,
    /// Also print a decimal approximation.
    #[arg(long)]
    approx: bool,
    /// Evaluation point for pbell-poly, as num/den.
    #[arg(long, allow_negative_numbers = true)]
    x: Option<String>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    p_max: usize,
    #[arg(long, value_enum, default_value = "pbell-numbers")]
    kind: TableKind,
    #[arg(long, default_value = "ztriangle")]
    backend: PBellBackend,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    nmax: usize,
    #[arg(long, default_value_t = 5)]
    pmax: usize,
    #[arg(long, default_value_t = 12)]
    order: usize,
    /// Comma-separated identity ids.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Human-readable lines instead of JSON.
    #[arg(long)]
    text: bool,
}

#[derive(Debug, Args)]
struct NumericArgs {
    #[command(subcommand)]
    check: NumericCommand,
}

#[derive(Debug, Subcommand)]
enum NumericCommand {
    /// Dobinski series for B_{n,p}.
    Dobinski {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = polybell_core::numeric::SERIES_TOL)]
        tol: f64,
    },
    /// Dobinski series for B_{n,p}(x).
    DobinskiPoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = polybell_core::numeric::SERIES_TOL)]
        tol: f64,
    },
    /// Cesàro-type contour integral for B_{n,p}.
    Cesaro {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 16)]
        quad_points: usize,
        #[arg(long, default_value_t = polybell_core::numeric::QUADRATURE_TOL)]
        tol: f64,
    },
    /// Monte Carlo moment E[(x+Z)^n] against B_{n,p}(x).
    Mc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Sample moment generating function against both closed forms.
    Mgf {
        #[arg(long)]
        p: usize,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Empirical pmf of Z against both closed forms.
    Pmf {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        k_max: u64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 3.0)]
        sigmas: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 30)]
    nmax: usize,
    /// A single column p.
    #[arg(long, conflicts_with = "pmax")]
    p: Option<usize>,
    /// All columns 0..=pmax.
    #[arg(long)]
    pmax: Option<usize>,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "explicit,r3,ztriangle,genbernoulli"
    )]
    backends: Vec<PBellBackend>,
    #[arg(long, default_value_t = 1)]
    repeat: usize,
}

/// A command failure carrying its exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub(crate) fn check(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CHECK_FAILED,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("I/O error: {e}"))
    }
}

pub(crate) type CmdResult = Result<i32, Failure>;

fn thread_cap() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::usage(format!(
                "{THREADS_ENV} must be a positive integer, got '{v}'"
            ))),
        },
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = thread_cap().and_then(|cap| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = cap {
            builder = builder.num_threads(n);
        }
        let pool = builder
            .build()
            .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
        let mut buf = Vec::new();
        let r = pool.install(|| dispatch(cli.command, &mut buf));
        out.write_all(&buf)?;
        r
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "polybell: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> CmdResult {
    match command {
        Command::Value(a) => commands::cmd_value(&a, out),
        Command::Table(a) => commands::cmd_table(&a, out),
        Command::Verify(a) => commands::cmd_verify(&a, out),
        Command::Numeric(a) => commands::cmd_numeric(&a.check, out),
        Command::Bench(a) => bench::cmd_bench(&a, out),
    }
}
