//! Double-double arithmetic: a value is the unevaluated sum `hi + lo` of two
//! binary64 numbers with `|lo| ≤ ½·ulp(hi)`, giving roughly 106 bits of
//! significand.
//!
//! Only the operations the reference eigensolver needs are provided.

use std::cmp::Ordering;
use std::ops::Neg;

use crate::error::{Error, Result};

/// Largest magnitude a double-double may carry. Above `2^996` the Dekker
/// splitting constant overflows, so results past this point are reported as
/// [`Error::Overflow`].
pub const DD_MAX: f64 = 6.696_928_794_914_171e299;

/// Smallest magnitude at which `lo` is still guaranteed to be a normal
/// number (`2^-916 = 2^(-1022 + 106)`).
pub const DD_MIN_NORMAL: f64 = 1.805_194_375_864_829_6e-276;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DDouble {
    pub hi: f64,
    pub lo: f64,
}

/// `a + b = s + e` exactly (Knuth).
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// `a + b = s + e` exactly, assuming `|a| ≥ |b|` (Dekker).
#[inline]
pub fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// `a · b = p + e` exactly, barring underflow of `e`.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

fn checked(hi: f64, lo: f64) -> Result<DDouble> {
    if !hi.is_finite() || hi.abs() > DD_MAX {
        return Err(Error::Overflow);
    }
    let (hi, lo) = quick_two_sum(hi, lo);
    Ok(DDouble { hi, lo })
}

impl DDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };

    /// Builds a normalized pair from two arbitrary doubles.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Nearest binary64 value.
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    pub fn is_sign_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.hi.is_sign_negative())
    }

    /// Exact multiplication by `2^n`, provided the result stays normal.
    pub fn scale_pow2(self, n: i32) -> Self {
        Self {
            hi: libm::scalbn(self.hi, n),
            lo: libm::scalbn(self.lo, n),
        }
    }
}

impl Neg for DDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl From<f64> for DDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl PartialOrd for DDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

/// Sum with relative error ≤ 2^-105 (two-sum on both components).
pub fn dd_add(x: DDouble, y: DDouble) -> DDouble {
    let (s1, s2) = two_sum(x.hi, y.hi);
    let (t1, t2) = two_sum(x.lo, y.lo);
    let (s1, s2) = quick_two_sum(s1, s2 + t1);
    let (hi, lo) = quick_two_sum(s1, s2 + t2);
    DDouble { hi, lo }
}

pub fn dd_sub(x: DDouble, y: DDouble) -> DDouble {
    dd_add(x, -y)
}

/// Product with relative error ≤ 2^-104. The cross terms are accumulated
/// with fused multiply-adds (Joldes, Muller and Popescu, 2017).
pub fn dd_mul(x: DDouble, y: DDouble) -> Result<DDouble> {
    let (p, e) = two_prod(x.hi, y.hi);
    let cross = x.lo.mul_add(y.hi, x.hi.mul_add(y.lo, x.lo * y.lo));
    checked(p, e + cross)
}

/// Quotient by long division with three binary64 quotient digits.
pub fn dd_div(x: DDouble, y: DDouble) -> Result<DDouble> {
    if y.hi == 0.0 {
        return Err(Error::Overflow);
    }
    let q1 = x.hi / y.hi;
    let r = dd_sub(x, dd_mul(DDouble::from_f64(q1), y)?);
    let q2 = r.hi / y.hi;
    let r = dd_sub(r, dd_mul(DDouble::from_f64(q2), y)?);
    let q3 = r.hi / y.hi;
    let (hi, lo) = quick_two_sum(q1, q2);
    let q = dd_add(DDouble { hi, lo }, DDouble::from_f64(q3));
    checked(q.hi, q.lo)
}

/// Square root from a binary64 seed and one Newton correction.
pub fn dd_sqrt(x: DDouble) -> Result<DDouble> {
    if x.hi < 0.0 {
        return Err(Error::NegativeSqrt(x.to_f64()));
    }
    if x.hi == 0.0 {
        return Ok(DDouble::ZERO);
    }
    let q = x.hi.sqrt();
    let (p, e) = two_prod(q, q);
    let diff = dd_sub(x, DDouble { hi: p, lo: e });
    let (hi, lo) = quick_two_sum(q, diff.hi / (2.0 * q));
    Ok(DDouble { hi, lo })
}

/// `√(x² + y²)` in double-double. Both operands are first brought to order
/// one by the same power of two, so the squares neither overflow nor lose
/// the low words to underflow, and the scaling itself is exact.
pub fn dd_hypot(x: DDouble, y: DDouble) -> Result<DDouble> {
    let (x, y) = (x.abs(), y.abs());
    let big = if x >= y { x } else { y };
    if big.is_zero() {
        return Ok(DDouble::ZERO);
    }
    let k = libm::ilogb(big.hi);
    let xs = x.scale_pow2(-k);
    let ys = y.scale_pow2(-k);
    let sum = dd_add(dd_mul(xs, xs)?, dd_mul(ys, ys)?);
    let root = dd_sqrt(sum)?.scale_pow2(k);
    checked(root.hi, root.lo)
}
