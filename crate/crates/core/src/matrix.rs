use crate::error::{Error, Result};
use crate::hypot::robust_hypot;

/// A real symmetric 2×2 matrix `[[a_pp, a_pq], [a_pq, a_qq]]`.
///
/// Only one off-diagonal value is stored, so symmetry holds by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMat2 {
    pub a_pp: f64,
    pub a_pq: f64,
    pub a_qq: f64,
}

impl SymMat2 {
    pub const fn new(a_pp: f64, a_pq: f64, a_qq: f64) -> Self {
        Self { a_pp, a_pq, a_qq }
    }

    /// Fails on the first entry that is NaN or infinite.
    pub fn check_finite(&self) -> Result<()> {
        for (entry, value) in [
            ("a_pp", self.a_pp),
            ("a_pq", self.a_pq),
            ("a_qq", self.a_qq),
        ] {
            if !value.is_finite() {
                return Err(Error::NonFinite { entry, value });
            }
        }
        Ok(())
    }
}

/// Plane rotation `V = [[c, s], [-s, c]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation2 {
    pub c: f64,
    pub s: f64,
}

impl Rotation2 {
    pub const IDENTITY: Self = Self { c: 1.0, s: 0.0 };

    pub const fn new(c: f64, s: f64) -> Self {
        Self { c, s }
    }

    /// Tangent of the rotation angle, `s / c`.
    pub fn tangent(&self) -> f64 {
        self.s / self.c
    }
}

/// A rotation together with the two (unordered) eigenvalues it exposes.
///
/// `lambda1` always sits in the (1,1) slot of `VᵀAV` and `lambda2` in the
/// (2,2) slot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigen2 {
    pub rot: Rotation2,
    pub lambda1: f64,
    pub lambda2: f64,
}

/// Full product `VᵀAV` in binary64, returned row-major as
/// `(m11, m12, m21, m22)`. The off-diagonal slots differ only by rounding.
pub fn apply_rotation(a: &SymMat2, rot: &Rotation2) -> (f64, f64, f64, f64) {
    let (c, s) = (rot.c, rot.s);
    // AV
    let av11 = a.a_pp * c - a.a_pq * s;
    let av12 = a.a_pp * s + a.a_pq * c;
    let av21 = a.a_pq * c - a.a_qq * s;
    let av22 = a.a_pq * s + a.a_qq * c;
    // Vᵀ(AV), Vᵀ = [[c, -s], [s, c]]
    let m11 = c * av11 - s * av21;
    let m12 = c * av12 - s * av22;
    let m21 = s * av11 + c * av21;
    let m22 = s * av12 + c * av22;
    (m11, m12, m21, m22)
}

/// `‖AV − VΛ‖_F` evaluated entry-wise in binary64.
///
/// The four residual entries are combined with [`robust_hypot`] so the norm
/// itself cannot overflow or underflow.
pub fn residual_fro(a: &SymMat2, e: &Eigen2) -> f64 {
    let (c, s) = (e.rot.c, e.rot.s);
    let (l1, l2) = (e.lambda1, e.lambda2);
    let r11 = (a.a_pp * c - a.a_pq * s) - c * l1;
    let r12 = (a.a_pp * s + a.a_pq * c) - s * l2;
    let r21 = (a.a_pq * c - a.a_qq * s) + s * l1;
    let r22 = (a.a_pq * s + a.a_qq * c) - c * l2;
    robust_hypot(robust_hypot(r11, r12), robust_hypot(r21, r22))
}

/// Frobenius norm of the full matrix (the off-diagonal counts twice).
pub fn frobenius_norm(a: &SymMat2) -> f64 {
    robust_hypot(robust_hypot(a.a_pp, a.a_pq), robust_hypot(a.a_pq, a.a_qq))
}
