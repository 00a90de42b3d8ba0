//! `start:end:xSTEP` variance grids.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("grid spec `{0}` is not of the form start:end:xSTEP")]
    Syntax(String),
    #[error("`{0}` is not a positive finite number")]
    BadNumber(String),
    #[error("step x{0} never reaches the end of the grid")]
    Unreachable(f64),
    #[error("end is not a whole number of steps from start")]
    Misaligned,
}

fn positive(s: &str) -> Result<f64, GridError> {
    match s.trim().parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(GridError::BadNumber(s.to_owned())),
    }
}

/// If `x` is exactly the double nearest `10^p`, returns `p`.
fn decimal_power(x: f64) -> Option<i32> {
    let p = x.log10().round() as i32;
    (format!("1e{p}").parse::<f64>().ok()? == x).then_some(p)
}

/// Expands `start:end:xSTEP` into `start, start·STEP, …, end`.
///
/// When the step is a power of ten every point is produced by decimal
/// exponent arithmetic, so `1e0:1e300:x1e20` yields exactly the literals
/// `1e0, 1e20, …, 1e300`. Other steps use `start·STEP^k`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, GridError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, end, step] = parts.as_slice() else {
        return Err(GridError::Syntax(spec.to_owned()));
    };
    let step = step
        .strip_prefix('x')
        .ok_or_else(|| GridError::Syntax(spec.to_owned()))?;
    let (start, end, step) = (positive(start)?, positive(end)?, positive(step)?);

    if start == end {
        return Ok(vec![start]);
    }
    if step == 1.0 || (end > start) != (step > 1.0) {
        return Err(GridError::Unreachable(step));
    }
    let steps = (end / start).ln() / step.ln();
    let n = steps.round();
    if (steps - n).abs() > 1e-9 * n.max(1.0) {
        return Err(GridError::Misaligned);
    }
    let n = n as i32;

    let points = match decimal_power(step) {
        Some(p) => {
            let shortest = format!("{start:e}");
            let (mantissa, exp) = shortest.split_once('e').expect("`{:e}` has an exponent");
            let exp: i32 = exp.parse().expect("integer exponent");
            (0..=n)
                .map(|k| {
                    format!("{mantissa}e{}", exp + k * p)
                        .parse::<f64>()
                        .expect("decimal")
                })
                .collect()
        }
        None => (0..=n).map(|k| start * step.powi(k)).collect(),
    };
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_decade_steps() {
        let g = parse_grid("1e0:1e300:x1e20").unwrap();
        // independent count: exponents 0, 20, …, 300
        let expected = (0..).map(|k| 20 * k).take_while(|&e| e <= 300).count();
        assert_eq!(g.len(), expected);
        assert_eq!(g.len(), 16);
        for (k, v) in g.iter().enumerate() {
            assert_eq!(*v, format!("1e{}", 20 * k).parse::<f64>().unwrap());
        }
    }

    #[test]
    fn descending() {
        let g = parse_grid("1:1e-300:x1e-20").unwrap();
        assert_eq!(g.len(), 16);
        assert_eq!(g[15], 1e-300);
        assert_eq!(parse_grid("2.5e3:2.5e-3:x0.1").unwrap().len(), 7);
    }

    #[test]
    fn non_decimal_step() {
        assert_eq!(
            parse_grid("1:256:x4").unwrap(),
            vec![1.0, 4.0, 16.0, 64.0, 256.0]
        );
    }

    #[test]
    fn single_point() {
        assert_eq!(parse_grid("3:3:x10").unwrap(), vec![3.0]);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(parse_grid("1e0:1e300"), Err(GridError::Syntax(_))));
        assert!(matches!(
            parse_grid("1e0:1e300:1e20"),
            Err(GridError::Syntax(_))
        ));
        assert!(matches!(
            parse_grid("0:1e300:x1e20"),
            Err(GridError::BadNumber(_))
        ));
        assert!(matches!(
            parse_grid("1:nan:x10"),
            Err(GridError::BadNumber(_))
        ));
        assert!(matches!(
            parse_grid("1:1e10:x0.1"),
            Err(GridError::Unreachable(_))
        ));
        assert!(matches!(
            parse_grid("1:1e10:x1"),
            Err(GridError::Unreachable(_))
        ));
        assert_eq!(parse_grid("1:1e10:x1e3"), Err(GridError::Misaligned));
    }
}
