//! Front end for the `jacobi2` binary: single-matrix solves, residual
//! sweeps, and the CSV format the plotting scripts consume.

pub mod commands;
pub mod csv;
pub mod grid;

pub use commands::{solve, sweep, CliError, SweepArgs};
pub use csv::{format_f64, parse_csv, write_csv, CsvError, CsvRow, HEADER};
pub use grid::{parse_grid, GridError};
