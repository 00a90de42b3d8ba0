//! Double-double arithmetic checked against exact rational arithmetic.

use jacobi2_core::oracle::dd::{dd_add, dd_div, dd_hypot, dd_mul, dd_sqrt, dd_sub, DDouble};
use jacobi2_core::{oracle_eigen, SymMat2};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 10_000;

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

fn value(x: DDouble) -> BigRational {
    exact(x.hi) + exact(x.lo)
}

fn pow2(k: i32) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    if k >= 0 {
        num::pow(two, k as usize)
    } else {
        BigRational::one() / num::pow(two, (-k) as usize)
    }
}

/// `|got − want| ≤ 2^-bits · |want|`
fn within(got: &BigRational, want: &BigRational, bits: i32) -> bool {
    (got - want).abs() <= want.abs() * pow2(-bits)
}

fn decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().unwrap();
    BigRational::new(digits, num::pow(BigInt::from(10), frac.len()))
}

fn normalized(x: DDouble) -> bool {
    x.hi + x.lo == x.hi
}

/// A normalized double-double with a random exponent in ±`range` and a
/// full-width low word.
fn random_dd(rng: &mut ChaCha8Rng, range: i32) -> DDouble {
    let hi: f64 = rng.gen_range(1.0..2.0) * 2f64.powi(rng.gen_range(-range..=range));
    let hi = if rng.gen() { -hi } else { hi };
    let lo = rng.gen_range(-0.5..0.5) * f64::EPSILON * hi.abs();
    DDouble::new(hi, lo)
}

#[test]
fn add_and_sub_error_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..SAMPLES {
        let (x, y) = (random_dd(&mut rng, 60), random_dd(&mut rng, 60));
        for (got, want) in [
            (dd_add(x, y), value(x) + value(y)),
            (dd_sub(x, y), value(x) - value(y)),
        ] {
            assert!(normalized(got));
            assert!(within(&value(got), &want, 105), "{x:?} ± {y:?}");
        }
    }
}

#[test]
fn add_close_values_cancels_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..SAMPLES {
        let x = random_dd(&mut rng, 10);
        let y = -DDouble::new(x.hi, x.lo * rng.gen_range(0.5..1.5));
        let got = dd_add(x, y);
        assert!(within(&value(got), &(value(x) + value(y)), 105));
    }
}

#[test]
fn mul_error_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..SAMPLES {
        let (x, y) = (random_dd(&mut rng, 200), random_dd(&mut rng, 200));
        let got = dd_mul(x, y).unwrap();
        assert!(normalized(got));
        assert!(
            within(&value(got), &(value(x) * value(y)), 104),
            "{x:?} · {y:?}"
        );
    }
}

#[test]
fn div_error_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..SAMPLES {
        let (x, y) = (random_dd(&mut rng, 200), random_dd(&mut rng, 200));
        let got = dd_div(x, y).unwrap();
        assert!(normalized(got));
        assert!(
            within(&value(got), &(value(x) / value(y)), 103),
            "{x:?} / {y:?}"
        );
    }
}

#[test]
fn sqrt_error_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..SAMPLES {
        let x = random_dd(&mut rng, 400).abs();
        let r = value(dd_sqrt(x).unwrap());
        // relative error e in the root is 2e in its square
        assert!(within(&(&r * &r), &value(x), 102), "sqrt {x:?}");
    }
}

#[test]
fn hypot_error_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..SAMPLES {
        let x = random_dd(&mut rng, 250);
        let y = random_dd(&mut rng, 250);
        let h = value(dd_hypot(x, y).unwrap());
        let want = value(x) * value(x) + value(y) * value(y);
        assert!(within(&(&h * &h), &want, 101), "hypot {x:?} {y:?}");
    }
}

#[test]
fn one_tenth_plus_two_tenths() {
    let tenth = dd_div(1.0.into(), 10.0.into()).unwrap();
    let fifth = dd_div(2.0.into(), 10.0.into()).unwrap();
    let sum = value(dd_add(tenth, fifth));
    let want = decimal("0.3");
    assert!((sum - &want).abs() < want * decimal("0.000000000000000000000000000001"));
}

#[test]
fn one_third_squared() {
    let third = dd_div(1.0.into(), 3.0.into()).unwrap();
    let sq = value(dd_mul(third, third).unwrap());
    let want = BigRational::new(BigInt::from(1), BigInt::from(9));
    assert!((sq - &want).abs() < want * decimal("0.000000000000000000000000000001"));
}

#[test]
fn square_root_of_two_to_thirty_digits() {
    let r = value(dd_sqrt(2.0.into()).unwrap());
    let want = decimal("1.41421356237309504880168872420969807856967187537694");
    assert!((r - &want).abs() < want * decimal("0.000000000000000000000000000001"));
}

#[test]
fn oracle_two_plus_minus_root_two() {
    let e = oracle_eigen(&SymMat2::new(1.0, 1.0, 3.0)).unwrap();
    let tol = decimal("0.0000000000000000000000001");
    let l1 = decimal("0.58578643762690495119831127579030192143032812462305");
    let l2 = decimal("3.41421356237309504880168872420969807856967187537694");
    assert!((value(e.lambda1) - &l1).abs() < &l1 * &tol);
    assert!((value(e.lambda2) - &l2).abs() < &l2 * &tol);
}

#[test]
fn oracle_rotation_is_orthonormal_and_diagonalizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..SAMPLES {
        let a = SymMat2::new(
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
        );
        let e = oracle_eigen(&a).unwrap();
        let (c, s) = (value(e.c), value(e.s));
        let unit = &c * &c + &s * &s - BigRational::one();
        assert!(unit.abs() <= decimal("0.000000000000000000000000000001"));

        // (VᵀAV)₁₂ = cs(a_pp − a_qq) + a_pq(c² − s²), evaluated exactly
        let (app, apq, aqq) = (exact(a.a_pp), exact(a.a_pq), exact(a.a_qq));
        let off = &c * &s * (&app - &aqq) + &apq * (&c * &c - &s * &s);
        let norm_sq = &app * &app + &apq * &apq * BigRational::from_integer(2.into()) + &aqq * &aqq;
        // |off| ≤ 1e-28·‖A‖_F, compared in squares
        let limit = decimal("0.0000000000000000000000000001");
        assert!(&off * &off <= &limit * &limit * norm_sq, "{a:?}");
    }
}

#[test]
fn oracle_small_eigenvalue_series() {
    // λ₂ = (a − √(a² + 4))/2 = −1/a + 1/a³ − … for A = (a, 1, 0)
    let a = 1e200;
    let e = oracle_eigen(&SymMat2::new(a, 1.0, 0.0)).unwrap();
    let want = -BigRational::one() / exact(a);
    assert!(within(&value(e.lambda2), &want, 100));
    assert!(!e.lambda2.is_zero());
}

#[test]
fn zero_is_exact() {
    assert!(dd_sqrt(DDouble::ZERO).unwrap().is_zero());
    assert!(value(dd_add(DDouble::ZERO, DDouble::ZERO)).is_zero());
}
