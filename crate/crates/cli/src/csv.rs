//! Sweep results as CSV.
//!
//! ```text
//! variance,algorithm,n,mean_residual,max_residual,mean_residual_normalized
//! 1.0000000000000000e-300,improved,10000,2.0019455111562342e-166,...
//! ```
//!
//! UTF-8, LF line endings, header mandatory. Floats are written in
//! scientific notation with 17 significant digits, which round-trips every
//! binary64 value. Rows are sorted by variance, then algorithm name.

use std::fmt::Write as _;

use jacobi2_core::{Algorithm, SweepRecord};
use thiserror::Error;

pub const HEADER: &str = "variance,algorithm,n,mean_residual,max_residual,mean_residual_normalized";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CsvError {
    #[error("missing or wrong header")]
    Header,
    #[error("line {line}: expected 6 fields, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: bad {field} value `{value}`")]
    Field {
        line: usize,
        field: &'static str,
        value: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvRow {
    pub variance: f64,
    pub algorithm: Algorithm,
    pub n: usize,
    pub mean_residual: f64,
    pub max_residual: f64,
    pub mean_residual_normalized: f64,
}

impl From<&SweepRecord> for CsvRow {
    fn from(r: &SweepRecord) -> Self {
        Self {
            variance: r.variance,
            algorithm: r.algorithm,
            n: r.n,
            mean_residual: r.mean_residual,
            max_residual: r.max_residual,
            mean_residual_normalized: r.mean_residual_normalized,
        }
    }
}

/// 17 significant digits in scientific notation, e.g. `5.8578643762690485e-1`.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Serializes `rows` in canonical order.
pub fn write_csv(rows: &[CsvRow]) -> String {
    let mut sorted = rows.to_vec();
    sorted.sort_by(|a, b| {
        a.variance
            .total_cmp(&b.variance)
            .then_with(|| a.algorithm.name().cmp(b.algorithm.name()))
    });
    let mut out = String::with_capacity(64 * (sorted.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for r in &sorted {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            format_f64(r.variance),
            r.algorithm,
            r.n,
            format_f64(r.mean_residual),
            format_f64(r.max_residual),
            format_f64(r.mean_residual_normalized),
        )
        .expect("writing to a String");
    }
    out
}

fn float(line: usize, field: &'static str, value: &str) -> Result<f64, CsvError> {
    value.parse().map_err(|_| CsvError::Field {
        line,
        field,
        value: value.to_owned(),
    })
}

pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>, CsvError> {
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Err(CsvError::Header);
    }
    lines
        .enumerate()
        .map(|(i, l)| {
            let line = i + 2;
            let fields: Vec<&str> = l.split(',').collect();
            let [variance, algorithm, n, mean, max, norm] = fields.as_slice() else {
                return Err(CsvError::FieldCount {
                    line,
                    found: fields.len(),
                });
            };
            Ok(CsvRow {
                variance: float(line, "variance", variance)?,
                algorithm: algorithm.parse().map_err(|_| CsvError::Field {
                    line,
                    field: "algorithm",
                    value: algorithm.to_string(),
                })?,
                n: n.parse().map_err(|_| CsvError::Field {
                    line,
                    field: "n",
                    value: n.to_string(),
                })?,
                mean_residual: float(line, "mean_residual", mean)?,
                max_residual: float(line, "max_residual", max)?,
                mean_residual_normalized: float(line, "mean_residual_normalized", norm)?,
            })
        })
        .collect()
}
