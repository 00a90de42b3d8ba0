//! Jacobi rotations for real symmetric 2×2 matrices.
//!
//! Two constructions of the rotation `V = [[c, s], [-s, c]]` with
//! `VᵀAV = diag(λ₁, λ₂)` are provided side by side:
//!
//! * [`jacobi_standard`], the classic form that divides by `2·a_pq` and
//!   squares the resulting ratio, and
//! * [`jacobi_improved`], which keeps the half gap unscaled and lets
//!   [`robust_hypot`] absorb the badly scaled cases.
//!
//! [`naive_direct`] is a deliberately naive closed-form solver used as a
//! third comparator. The [`oracle`] module recomputes the eigenpairs in
//! double-double arithmetic, and [`experiment`] runs the residual sweeps
//! that compare all three under extreme element scaling.

mod error;
pub mod experiment;
mod hypot;
mod jacobi;
mod matrix;
pub mod oracle;

pub use error::{Error, Result};
pub use experiment::{
    default_grids, generate_test_set, run_sweep, scale_element, Algorithm, ResidualEval,
    SweepConfig, SweepRecord, Target,
};
pub use hypot::robust_hypot;
pub use jacobi::{
    improved_tangent, jacobi_improved, jacobi_standard, naive_direct, standard_tangent,
};
pub use matrix::{apply_rotation, frobenius_norm, residual_fro, Eigen2, Rotation2, SymMat2};
pub use oracle::{oracle_eigen, residual_fro_dd, ulp_diff, DDouble, EigenDD};
