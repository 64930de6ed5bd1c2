//! Plain-text spectrogram files.
//!
//! ```text
//! # nust v1
//! # alpha=0.18 gamma=0.5 bandwidth=20 sigma_cap=250 truncation_k=5 min_ess=4
//! <tau values, space-separated>
//! <frequency values, space-separated>
//! <count_tau rows of count_freq powers>
//! <count_tau rows of count_freq 0/1 validity flags>
//! ```
//!
//! Floats are written in shortest round-trip form, so write -> read is
//! lossless for finite values. The config echo carries whichever fields
//! the spectrogram metadata holds; absent optional fields are omitted.

use std::fs;
use std::io::Write;
use std::path::Path;

use nust_core::{FrequencyGrid, NustConfig, Spectrogram, TimeGrid};

use crate::error::CliError;

pub const SPECTROGRAM_MAGIC: &str = "# nust v1";

pub fn write_spectrogram(spec: &Spectrogram, path: impl AsRef<Path>) -> Result<(), CliError> {
    fs::write(path, spectrogram_to_string(spec))?;
    Ok(())
}

pub fn spectrogram_to_string(spec: &Spectrogram) -> String {
    let mut out = Vec::new();
    writeln!(out, "{SPECTROGRAM_MAGIC}").unwrap();
    writeln!(out, "#{}", config_echo(spec.meta())).unwrap();
    writeln!(out, "{}", join_floats(spec.time_grid().values())).unwrap();
    writeln!(out, "{}", join_floats(spec.freq_grid().values())).unwrap();
    for j in 0..spec.time_grid().count() {
        writeln!(out, "{}", join_floats(spec.time_row(j))).unwrap();
    }
    for j in 0..spec.time_grid().count() {
        let row: Vec<&str> = spec
            .valid_row(j)
            .iter()
            .map(|&v| if v { "1" } else { "0" })
            .collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    String::from_utf8(out).expect("text output is UTF-8")
}

fn join_floats(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("{v}")).collect();
    parts.join(" ")
}

fn config_echo(meta: Option<&NustConfig>) -> String {
    let Some(cfg) = meta else {
        return String::new();
    };
    let mut echo = format!(
        " alpha={} gamma={} truncation_k={} min_ess={}",
        cfg.alpha, cfg.gamma, cfg.truncation_k, cfg.min_ess
    );
    if let Some(h) = cfg.bandwidth {
        echo.push_str(&format!(" bandwidth={h}"));
    }
    if let Some(cap) = cfg.sigma_cap {
        echo.push_str(&format!(" sigma_cap={cap}"));
    }
    echo
}

pub fn read_spectrogram(path: impl AsRef<Path>) -> Result<Spectrogram, CliError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| CliError::from(e).with_path(path))?;
    parse_spectrogram(&text).map_err(|e| e.with_path(path))
}

pub fn parse_spectrogram(text: &str) -> Result<Spectrogram, CliError> {
    let mut lines = text.lines().enumerate();

    let (_, magic) = lines.next().ok_or(CliError::FormatVersionMismatch {
        expected: SPECTROGRAM_MAGIC,
    })?;
    if magic.trim_end() != SPECTROGRAM_MAGIC {
        return Err(CliError::FormatVersionMismatch {
            expected: SPECTROGRAM_MAGIC,
        });
    }

    let (idx, config_line) = lines
        .next()
        .ok_or_else(|| CliError::parse(2, "missing config line"))?;
    let rest = config_line
        .strip_prefix('#')
        .ok_or_else(|| CliError::parse(idx + 1, "config line must start with `#`"))?;
    let meta = parse_config_echo(rest, idx + 1)?;

    let (idx, tau_line) = lines
        .next()
        .ok_or_else(|| CliError::parse(3, "missing time grid"))?;
    let time_grid =
        TimeGrid::from_values(parse_floats(tau_line, idx + 1)?).map_err(CliError::from)?;

    let (idx, freq_line) = lines
        .next()
        .ok_or_else(|| CliError::parse(4, "missing frequency grid"))?;
    let freq_grid =
        FrequencyGrid::from_values(parse_floats(freq_line, idx + 1)?).map_err(CliError::from)?;

    let nt = time_grid.count();
    let nf = freq_grid.count();
    let mut power = Vec::with_capacity(nt * nf);
    for _ in 0..nt {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| CliError::parse(0, "missing power rows"))?;
        let row = parse_floats(line, idx + 1)?;
        if row.len() != nf {
            return Err(CliError::parse(
                idx + 1,
                format!("expected {nf} powers, got {}", row.len()),
            ));
        }
        power.extend(row);
    }

    let mut valid = Vec::with_capacity(nt * nf);
    for _ in 0..nt {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| CliError::parse(0, "missing validity rows"))?;
        let mut count = 0;
        for token in line.split_whitespace() {
            match token {
                "0" => valid.push(false),
                "1" => valid.push(true),
                other => {
                    return Err(CliError::parse(
                        idx + 1,
                        format!("validity flags must be 0 or 1, got `{other}`"),
                    ));
                }
            }
            count += 1;
        }
        if count != nf {
            return Err(CliError::parse(
                idx + 1,
                format!("expected {nf} flags, got {count}"),
            ));
        }
    }

    if let Some((idx, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(CliError::parse(
            idx + 1,
            format!("unexpected trailing content `{line}`"),
        ));
    }

    Spectrogram::from_parts(time_grid, freq_grid, power, valid, meta).map_err(CliError::from)
}

fn parse_floats(line: &str, line_no: usize) -> Result<Vec<f64>, CliError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<f64>()
                .map_err(|_| CliError::parse(line_no, format!("bad float `{tok}`")))
        })
        .collect()
}

fn parse_config_echo(rest: &str, line_no: usize) -> Result<Option<NustConfig>, CliError> {
    let mut cfg = NustConfig::default();
    let mut any = false;
    for pair in rest.split_whitespace() {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| CliError::parse(line_no, format!("bad config pair `{pair}`")))?;
        let parsed: f64 = value
            .parse()
            .map_err(|_| CliError::parse(line_no, format!("bad config value `{pair}`")))?;
        any = true;
        match key {
            "alpha" => cfg.alpha = parsed,
            "gamma" => cfg.gamma = parsed,
            "bandwidth" => cfg.bandwidth = Some(parsed),
            "sigma_cap" => cfg.sigma_cap = Some(parsed),
            "truncation_k" => cfg.truncation_k = parsed,
            "min_ess" => cfg.min_ess = parsed,
            other => {
                return Err(CliError::parse(
                    line_no,
                    format!("unknown config key `{other}`"),
                ));
            }
        }
    }
    Ok(any.then_some(cfg))
}
