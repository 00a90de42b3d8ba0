use std::fmt::Write as _;

use jacobi2_core::{
    residual_fro, run_sweep, Algorithm, ResidualEval, SweepConfig, SymMat2, Target,
};
use thiserror::Error;

use crate::csv::{format_f64, write_csv, CsvRow};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] jacobi2_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for usage and I/O problems, 2 for numeric-domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Numeric(_) => 2,
        }
    }
}

/// Solves one matrix and renders the rotation, eigenvalues and residual.
pub fn solve(a: SymMat2, alg: Algorithm) -> Result<String, CliError> {
    let e = alg.solve(&a)?;
    let mut out = String::new();
    for (name, v) in [
        ("c", e.rot.c),
        ("s", e.rot.s),
        ("lambda1", e.lambda1),
        ("lambda2", e.lambda2),
        ("residual", residual_fro(&a, &e)),
    ] {
        writeln!(out, "{name} = {}", format_f64(v)).expect("writing to a String");
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepArgs {
    pub target: Target,
    pub grid: Vec<f64>,
    pub n: usize,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    pub residual: ResidualEval,
}

/// Runs a sweep and returns the CSV text.
pub fn sweep(args: &SweepArgs) -> Result<String, CliError> {
    let cfg = SweepConfig {
        target: args.target,
        variance_grid: args.grid.clone(),
        n_matrices: args.n,
        seed: args.seed,
        algorithms: args.algorithms.clone(),
        residual: args.residual,
    };
    let records = run_sweep(&cfg)?;
    let rows: Vec<CsvRow> = records.iter().map(CsvRow::from).collect();
    Ok(write_csv(&rows))
}
