use crate::error::{Error, Result};

/// Maps a finite double onto a signed integer line where adjacent doubles
/// are adjacent integers and both zeros land on 0.
fn ordinal(x: f64) -> i64 {
    let magnitude = (x.to_bits() & !(1u64 << 63)) as i64;
    if x.is_sign_negative() {
        -magnitude
    } else {
        magnitude
    }
}

/// Number of steps between `x` and `y` along the binary64 grid (0 if equal,
/// 1 for neighbours).
///
/// Both signed zeros count as the same point. Values of opposite sign are
/// rejected unless one of them is zero.
pub fn ulp_diff(x: f64, y: f64) -> Result<u64> {
    if x.is_nan() || y.is_nan() {
        return Err(Error::UlpNaN);
    }
    if x != 0.0 && y != 0.0 && x.is_sign_negative() != y.is_sign_negative() {
        return Err(Error::UlpOppositeSigns(x, y));
    }
    Ok(ordinal(x).abs_diff(ordinal(y)))
}
