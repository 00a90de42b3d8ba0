use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jacobi2_cli::{parse_grid, solve, sweep, CliError, SweepArgs};
use jacobi2_core::experiment::DEFAULT_N_MATRICES;
use jacobi2_core::{default_grids, Algorithm, ResidualEval, SymMat2, Target};

/// Overrides the default test-set size of `sweep`.
const N_ENV: &str = "JACOBI2_N";

#[derive(Parser)]
#[command(
    name = "jacobi2",
    version,
    about = "Jacobi rotations for symmetric 2x2 matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonalize [[APP, APQ], [APQ, AQQ]] and print c, s, the eigenvalues and the residual.
    #[command(allow_negative_numbers = true)]
    Solve {
        app: f64,
        apq: f64,
        aqq: f64,
        /// standard, improved or naive
        #[arg(long, default_value = "improved")]
        alg: String,
    },
    /// Average ‖AV − VΛ‖_F over a seeded N(0,1) test set while one entry is rescaled.
    Sweep {
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Built-in 16-point grid; defaults to `apq` for --target apq and `app-large` for --target app.
        #[arg(long, value_enum, num_args = 0..=1, default_missing_value = "auto", conflicts_with = "grid")]
        default_grid: Option<DefaultGrid>,
        /// Multiplicative grid `start:end:xSTEP`, e.g. 1e0:1e300:x1e20.
        #[arg(long, required_unless_present = "default_grid")]
        grid: Option<String>,
        /// Test-set size [default: $JACOBI2_N, else 10000]
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Comma-separated subset of standard,improved,naive.
        #[arg(long, value_delimiter = ',', default_value = "standard,improved,naive")]
        algs: Vec<String>,
        #[arg(long, value_enum, default_value = "binary64")]
        residual: ResidualArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Apq,
    App,
}

#[derive(Clone, Copy, ValueEnum)]
enum DefaultGrid {
    Auto,
    Apq,
    AppLarge,
    AppSmall,
}

#[derive(Clone, Copy, ValueEnum)]
enum ResidualArg {
    Binary64,
    DoubleDouble,
}

fn algorithm(name: &str) -> Result<Algorithm, CliError> {
    name.parse()
        .map_err(|e: jacobi2_core::experiment::UnknownAlgorithm| CliError::Usage(e.to_string()))
}

fn default_n() -> Result<usize, CliError> {
    match std::env::var(N_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Usage(format!("{N_ENV}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_N_MATRICES),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { app, apq, aqq, alg } => {
            let out = solve(SymMat2::new(app, apq, aqq), algorithm(&alg)?)?;
            print!("{out}");
        }
        Command::Sweep {
            target,
            default_grid,
            grid,
            n,
            seed,
            algs,
            residual,
            out,
        } => {
            let target = match target {
                TargetArg::Apq => Target::Apq,
                TargetArg::App => Target::App,
            };
            let grid = match (default_grid, grid) {
                (_, Some(spec)) => parse_grid(&spec).map_err(|e| CliError::Usage(e.to_string()))?,
                (Some(which), None) => {
                    let (apq, app_large, app_small) = default_grids();
                    match (which, target) {
                        (DefaultGrid::Apq, _) | (DefaultGrid::Auto, Target::Apq) => apq,
                        (DefaultGrid::AppLarge, _) | (DefaultGrid::Auto, Target::App) => app_large,
                        (DefaultGrid::AppSmall, _) => app_small,
                    }
                }
                (None, None) => unreachable!("clap requires --grid or --default-grid"),
            };
            let args = SweepArgs {
                target,
                grid,
                n: match n {
                    Some(n) => n,
                    None => default_n()?,
                },
                seed,
                algorithms: algs
                    .iter()
                    .map(|a| algorithm(a.trim()))
                    .collect::<Result<_, _>>()?,
                residual: match residual {
                    ResidualArg::Binary64 => ResidualEval::Binary64,
                    ResidualArg::DoubleDouble => ResidualEval::DoubleDouble,
                },
            };
            let csv = sweep(&args)?;
            std::fs::write(&out, csv).map_err(|source| CliError::Io {
                path: out.display().to_string(),
                source,
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("jacobi2: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
