//! Extended-precision reference solver and ulp utilities.
//!
//! [`oracle_eigen`] evaluates the hypot-based Jacobi formulas entirely in
//! double-double arithmetic. Its denominators never cancel, so with ~106
//! bits of working precision the rounded results adjudicate binary64
//! outputs at the ulp level.

pub mod dd;
mod ulp;

pub use dd::{dd_add, dd_div, dd_hypot, dd_mul, dd_sqrt, dd_sub, DDouble};
pub use ulp::ulp_diff;

use crate::error::{Error, Result};
use crate::hypot::robust_hypot;
use crate::matrix::{Eigen2, Rotation2, SymMat2};

/// Double-double eigenpair: rotation `(c, s)` and eigenvalues in the same
/// slot convention as [`Eigen2`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenDD {
    pub c: DDouble,
    pub s: DDouble,
    pub lambda1: DDouble,
    pub lambda2: DDouble,
}

impl EigenDD {
    /// Rounds every component to binary64.
    pub fn to_eigen2(&self) -> Eigen2 {
        Eigen2 {
            rot: Rotation2::new(self.c.to_f64(), self.s.to_f64()),
            lambda1: self.lambda1.to_f64(),
            lambda2: self.lambda2.to_f64(),
        }
    }
}

fn in_range(x: DDouble) -> Result<DDouble> {
    let m = x.hi.abs();
    if m > dd::DD_MAX {
        Err(Error::Overflow)
    } else if m != 0.0 && m < dd::DD_MIN_NORMAL {
        Err(Error::Underflow)
    } else {
        Ok(x)
    }
}

/// Reference eigenpair of `a` in double-double precision.
///
/// Fails with [`Error::Overflow`] or [`Error::Underflow`] when an input or a
/// nonzero eigenvalue leaves the range where double-double keeps its full
/// precision.
pub fn oracle_eigen(a: &SymMat2) -> Result<EigenDD> {
    a.check_finite()?;
    let app = in_range(a.a_pp.into())?;
    let apq = in_range(a.a_pq.into())?;
    let aqq = in_range(a.a_qq.into())?;

    let t = if apq.is_zero() {
        DDouble::ZERO
    } else {
        let delta = dd_sub(aqq, app).scale_pow2(-1);
        let h = dd_hypot(apq, delta)?;
        let den = if delta.is_sign_negative() && !delta.is_zero() {
            dd_sub(delta, h)
        } else {
            dd_add(delta, h)
        };
        dd_div(apq, den)?
    };

    let c = dd_div(DDouble::ONE, dd_sqrt(dd_add(DDouble::ONE, dd_mul(t, t)?))?)?;
    let s = dd_mul(t, c)?;
    let tp = dd_mul(t, apq)?;
    let lambda1 = in_range(dd_sub(app, tp))?;
    let lambda2 = in_range(dd_add(aqq, tp))?;
    Ok(EigenDD {
        c,
        s,
        lambda1,
        lambda2,
    })
}

/// `‖AV − VΛ‖_F` for binary64 `A`, `V` and `Λ`, with the residual entries
/// formed in double-double.
///
/// Every product of two binary64 numbers is exact in double-double, so each
/// entry is the true residual of the computed factors up to ~2^-104 of the
/// largest term. Unlike [`residual_fro`](crate::residual_fro), the result
/// is not floored by the rounding of its own evaluation.
pub fn residual_fro_dd(a: &SymMat2, e: &Eigen2) -> Result<f64> {
    let x = |v: f64| DDouble::from_f64(v);
    let (c, s) = (x(e.rot.c), x(e.rot.s));
    let (l1, l2) = (x(e.lambda1), x(e.lambda2));
    let (app, apq, aqq) = (x(a.a_pp), x(a.a_pq), x(a.a_qq));
    let r11 = dd_sub(dd_sub(dd_mul(app, c)?, dd_mul(apq, s)?), dd_mul(c, l1)?);
    let r12 = dd_sub(dd_add(dd_mul(app, s)?, dd_mul(apq, c)?), dd_mul(s, l2)?);
    let r21 = dd_add(dd_sub(dd_mul(apq, c)?, dd_mul(aqq, s)?), dd_mul(s, l1)?);
    let r22 = dd_sub(dd_add(dd_mul(apq, s)?, dd_mul(aqq, c)?), dd_mul(c, l2)?);
    Ok(robust_hypot(
        robust_hypot(r11.to_f64(), r12.to_f64()),
        robust_hypot(r21.to_f64(), r22.to_f64()),
    ))
}
