//! The two Jacobi rotation constructions and the naive comparator.
//!
//! Both Jacobi variants pick the root `t` of `t² + 2δt − 1 = 0` (in units
//! of `a_pq`) with `|t| ≤ 1`, then share the same tail:
//! `c = 1/√(1+t²)`, `s = t·c`, `λ₁ = a_pp − t·a_pq`, `λ₂ = a_qq + t·a_pq`.
//!
//! Everything here is written as plain, separately rounded IEEE operations.
//! rustc never contracts `a*b + c` into a fused multiply-add on its own, so
//! the expressions below round exactly as written on every target.

use crate::error::Result;
use crate::hypot::robust_hypot;
use crate::matrix::{Eigen2, Rotation2, SymMat2};

/// Tangent of the classic construction.
///
/// `δ = (a_qq − a_pp)/(2·a_pq)` and `t = 1/(δ ± √(1+δ²))`. For large `|δ|`
/// the square overflows, `t` collapses to ±0 and the small eigenvalue is
/// lost. That weakness is the point of this baseline and must be kept.
pub fn standard_tangent(a: &SymMat2) -> f64 {
    if a.a_pq != 0.0 {
        let delta = (a.a_qq - a.a_pp) / (2.0 * a.a_pq);
        if delta >= 0.0 {
            1.0 / (delta + (1.0 + delta * delta).sqrt())
        } else {
            1.0 / (delta - (1.0 + delta * delta).sqrt())
        }
    } else {
        0.0
    }
}

/// Tangent of the hypot-based construction.
///
/// `δ = (a_qq − a_pp)/2` stays unscaled and `t = a_pq/(δ ± hypot(a_pq, δ))`.
/// The two addends in the denominator always share a sign.
pub fn improved_tangent(a: &SymMat2) -> f64 {
    if a.a_pq != 0.0 {
        let delta = (a.a_qq - a.a_pp) / 2.0;
        if delta >= 0.0 {
            a.a_pq / (delta + robust_hypot(a.a_pq, delta))
        } else {
            a.a_pq / (delta - robust_hypot(a.a_pq, delta))
        }
    } else {
        0.0
    }
}

fn finish(a: &SymMat2, t: f64) -> Eigen2 {
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    Eigen2 {
        rot: Rotation2::new(c, s),
        lambda1: a.a_pp - t * a.a_pq,
        lambda2: a.a_qq + t * a.a_pq,
    }
}

/// Classic "stable" Jacobi rotation.
pub fn jacobi_standard(a: &SymMat2) -> Result<Eigen2> {
    a.check_finite()?;
    Ok(finish(a, standard_tangent(a)))
}

/// Jacobi rotation with the half gap left unscaled and the square root
/// replaced by [`robust_hypot`].
pub fn jacobi_improved(a: &SymMat2) -> Result<Eigen2> {
    a.check_finite()?;
    Ok(finish(a, improved_tangent(a)))
}

/// Closed-form angle solver with naive Rayleigh quotients.
///
/// `θ = ½·atan2(2a_pq, a_qq − a_pp)` and the eigenvalues are evaluated as
/// `vᵀAv` with explicit squares, which cancels badly on ill-scaled input.
/// It stands in for a library eigensolver as a third point of comparison.
/// Trigonometry goes through `libm` so the output does not depend on the
/// platform math library.
pub fn naive_direct(a: &SymMat2) -> Result<Eigen2> {
    a.check_finite()?;
    let theta = 0.5 * libm::atan2(2.0 * a.a_pq, a.a_qq - a.a_pp);
    let c = libm::cos(theta);
    let s = libm::sin(theta);
    let cs2 = 2.0 * c * s * a.a_pq;
    let lambda1 = c * c * a.a_pp - cs2 + s * s * a.a_qq;
    let lambda2 = s * s * a.a_pp + cs2 + c * c * a.a_qq;
    Ok(Eigen2 {
        rot: Rotation2::new(c, s),
        lambda1,
        lambda2,
    })
}
