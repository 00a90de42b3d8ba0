//! Residual sweeps: a fixed base set of N(0, 1) matrices, one element
//! rescaled to each variance on a grid, and the mean `‖AV − VΛ‖_F` of every
//! solver at every grid point.

mod rng;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jacobi::{jacobi_improved, jacobi_standard, naive_direct};
use crate::matrix::{frobenius_norm, residual_fro, Eigen2, SymMat2};
use crate::oracle::residual_fro_dd;

pub use rng::NormalStream;

/// Desk-scale default test-set size.
pub const DEFAULT_N_MATRICES: usize = 10_000;

/// Test-set size of the original experiment.
pub const FULL_N_MATRICES: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Standard,
    Improved,
    Naive,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Standard, Algorithm::Improved, Algorithm::Naive];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Standard => "standard",
            Algorithm::Improved => "improved",
            Algorithm::Naive => "naive",
        }
    }

    pub fn solve(self, a: &SymMat2) -> Result<Eigen2> {
        match self {
            Algorithm::Standard => jacobi_standard(a),
            Algorithm::Improved => jacobi_improved(a),
            Algorithm::Naive => naive_direct(a),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgorithm(pub String);

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown algorithm `{}` (expected standard, improved or naive)",
            self.0
        )
    }
}

impl std::error::Error for UnknownAlgorithm {}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAlgorithm(s.to_owned()))
    }
}

/// Which matrix element a sweep rescales.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// Off-diagonal entry.
    Apq,
    /// Top-left diagonal entry.
    App,
}

/// Arithmetic used to evaluate each `‖AV − VΛ‖_F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResidualEval {
    /// [`residual_fro`]: plain binary64, as a straightforward harness would.
    #[default]
    Binary64,
    /// [`residual_fro_dd`]: entries formed in double-double, so tiny
    /// residuals are not quantized by the evaluation itself.
    DoubleDouble,
}

impl ResidualEval {
    pub fn residual(self, a: &SymMat2, e: &Eigen2) -> Result<f64> {
        match self {
            ResidualEval::Binary64 => Ok(residual_fro(a, e)),
            ResidualEval::DoubleDouble => residual_fro_dd(a, e),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub target: Target,
    pub variance_grid: Vec<f64>,
    pub n_matrices: usize,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    pub residual: ResidualEval,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_matrices == 0 {
            return Err(Error::EmptyTestSet);
        }
        if self.variance_grid.is_empty() {
            return Err(Error::InvalidConfig("variance grid is empty"));
        }
        if let Some(&v) = self
            .variance_grid
            .iter()
            .find(|v| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::InvalidVariance(v));
        }
        let increasing = self.variance_grid.windows(2).all(|w| w[0] < w[1]);
        let decreasing = self.variance_grid.windows(2).all(|w| w[0] > w[1]);
        if !(increasing || decreasing) {
            return Err(Error::InvalidConfig(
                "variance grid is not strictly monotone",
            ));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidConfig("no algorithms selected"));
        }
        Ok(())
    }
}

/// One aggregated point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub variance: f64,
    pub algorithm: Algorithm,
    pub n: usize,
    pub mean_residual: f64,
    pub max_residual: f64,
    /// Mean of `‖AV − VΛ‖_F / ‖A‖_F`.
    pub mean_residual_normalized: f64,
}

/// `n` matrices whose three entries are independent N(0, 1) draws, taken in
/// the order `a_pp, a_pq, a_qq` from a single [`NormalStream`].
pub fn generate_test_set(n: usize, seed: u64) -> Result<Vec<SymMat2>> {
    if n == 0 {
        return Err(Error::EmptyTestSet);
    }
    let mut stream = NormalStream::new(seed);
    Ok((0..n)
        .map(|_| {
            let a_pp = stream.next_normal();
            let a_pq = stream.next_normal();
            let a_qq = stream.next_normal();
            SymMat2::new(a_pp, a_pq, a_qq)
        })
        .collect())
}

/// A rescaled copy of `set` with the target entry multiplied by
/// `√variance`. The input is left untouched.
pub fn scale_element(set: &[SymMat2], target: Target, variance: f64) -> Result<Vec<SymMat2>> {
    if !(variance.is_finite() && variance > 0.0) {
        return Err(Error::InvalidVariance(variance));
    }
    let factor = variance.sqrt();
    Ok(set
        .iter()
        .map(|a| match target {
            Target::Apq => SymMat2 {
                a_pq: a.a_pq * factor,
                ..*a
            },
            Target::App => SymMat2 {
                a_pp: a.a_pp * factor,
                ..*a
            },
        })
        .collect())
}

/// Sum in a fixed pairwise tree, so the rounding error grows like
/// `O(log n)` and the result does not depend on scheduling.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const LEAF: usize = 8;
    if xs.len() <= LEAF {
        return xs.iter().fold(0.0, |acc, &x| acc + x);
    }
    let (lo, hi) = xs.split_at(xs.len() / 2);
    pairwise_sum(lo) + pairwise_sum(hi)
}

fn aggregate(
    set: &[SymMat2],
    algorithm: Algorithm,
    variance: f64,
    eval: ResidualEval,
) -> Result<SweepRecord> {
    let mut raw = Vec::with_capacity(set.len());
    let mut normalized = Vec::with_capacity(set.len());
    for a in set {
        let r = eval.residual(a, &algorithm.solve(a)?)?;
        let norm = frobenius_norm(a);
        raw.push(r);
        normalized.push(if norm > 0.0 { r / norm } else { 0.0 });
    }
    let n = set.len();
    Ok(SweepRecord {
        variance,
        algorithm,
        n,
        mean_residual: pairwise_sum(&raw) / n as f64,
        max_residual: raw.iter().copied().fold(0.0, f64::max),
        mean_residual_normalized: pairwise_sum(&normalized) / n as f64,
    })
}

/// Runs the full sweep described by `cfg`.
///
/// The base set is generated once; every grid point rescales its own copy.
/// Grid points are evaluated in parallel, and records come back in grid
/// order and then in the order of `cfg.algorithms`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    cfg.validate()?;
    let base = generate_test_set(cfg.n_matrices, cfg.seed)?;
    let per_point: Vec<Vec<SweepRecord>> = cfg
        .variance_grid
        .par_iter()
        .map(|&variance| {
            let scaled = scale_element(&base, cfg.target, variance)?;
            cfg.algorithms
                .iter()
                .map(|&alg| aggregate(&scaled, alg, variance, cfg.residual))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(per_point.into_iter().flatten().collect())
}

fn decade_grid(exponent_step: i32) -> Vec<f64> {
    (0..16)
        .map(|k| {
            format!("1e{}", k * exponent_step)
                .parse()
                .expect("decimal literal")
        })
        .collect()
}

/// Variance grids for the three reference sweeps, each 16 decades apart by
/// twenty: `a_pq` shrinking from 1 to 1e-300, `a_pp` growing from 1 to
/// 1e300, and `a_pp` shrinking from 1 to 1e-300.
pub fn default_grids() -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    (decade_grid(-20), decade_grid(20), decade_grid(-20))
}
