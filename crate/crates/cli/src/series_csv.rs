//! Comma-separated series files: `time,value[,uncertainty]` rows with
//! `#` comments and an optional header row (detected by a non-numeric
//! first row). Lines are 1-indexed in errors.

use std::fs;
use std::io::Write;
use std::path::Path;

use nust_core::TimeSeries;

use crate::error::CliError;

/// Reads and validates a series file.
pub fn read_series(path: impl AsRef<Path>) -> Result<TimeSeries, CliError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| CliError::from(e).with_path(path))?;
    parse_series(&text).map_err(|e| e.with_path(path))
}

/// Parses series text. Two-column rows get no explicit uncertainties
/// (unit weights downstream); three-column rows carry per-point sigmas.
pub fn parse_series(text: &str) -> Result<TimeSeries, CliError> {
    let mut times = Vec::new();
    let mut values = Vec::new();
    let mut sigmas = Vec::new();
    let mut columns: Option<usize> = None;
    let mut header_allowed = true;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let numbers: Result<Vec<f64>, _> = fields.iter().map(|f| f.parse::<f64>()).collect();
        let numbers = match numbers {
            Ok(nums) => nums,
            Err(_) if header_allowed => {
                // a non-numeric first row is a header
                header_allowed = false;
                continue;
            }
            Err(_) => {
                return Err(CliError::parse(
                    line_no,
                    format!("expected numeric fields, got `{line}`"),
                ));
            }
        };
        header_allowed = false;
        if !(2..=3).contains(&numbers.len()) {
            return Err(CliError::parse(
                line_no,
                format!("expected 2 or 3 columns, got {}", numbers.len()),
            ));
        }
        match columns {
            None => columns = Some(numbers.len()),
            Some(c) if c != numbers.len() => {
                return Err(CliError::parse(
                    line_no,
                    format!("inconsistent column count: {} after {c}", numbers.len()),
                ));
            }
            Some(_) => {}
        }
        times.push(numbers[0]);
        values.push(numbers[1]);
        if numbers.len() == 3 {
            sigmas.push(numbers[2]);
        }
    }

    let uncertainties = (columns == Some(3)).then_some(sigmas);
    TimeSeries::new(times, values, uncertainties).map_err(CliError::from)
}

/// Writes a series as CSV. Values round-trip bit-exactly through the
/// shortest-representation float formatting.
pub fn write_series(path: impl AsRef<Path>, series: &TimeSeries) -> Result<(), CliError> {
    let mut out = Vec::new();
    let rows = series.times().iter().zip(series.values());
    match series.uncertainties() {
        Some(sigmas) => {
            writeln!(out, "# time,value,uncertainty")?;
            for ((t, y), s) in rows.zip(sigmas) {
                writeln!(out, "{t},{y},{s}")?;
            }
        }
        None => {
            writeln!(out, "# time,value")?;
            for (t, y) in rows {
                writeln!(out, "{t},{y}")?;
            }
        }
    }
    fs::write(path, out)?;
    Ok(())
}

/// Writes `(x, y)` rows under a comment header; used for periodogram and
/// density dumps.
pub fn write_two_column_csv(
    path: impl AsRef<Path>,
    header: &str,
    rows: impl Iterator<Item = (f64, f64)>,
) -> Result<(), CliError> {
    let mut out = Vec::new();
    writeln!(out, "# {header}")?;
    for (x, y) in rows {
        writeln!(out, "{x},{y}")?;
    }
    fs::write(path, out)?;
    Ok(())
}
