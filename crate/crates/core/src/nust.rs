//! The adaptive spectrogram engine: a localized weighted sinusoid fit at
//! every time-frequency grid cell, using the doubly adaptive window
//! weights. Cell power is the same fractional chi^2 reduction as the
//! global periodogram, with both the fit and the constant-model baseline
//! evaluated under the localized weights so the `[0, 1]` bound is
//! preserved per cell.
//!
//! Cells are independent: the grid evaluation is data-parallel with
//! results placed by index, so output is identical for any worker count.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::density::DensityEstimate;
use crate::error::{Error, Result};
use crate::gls::weighted_sine_fit;
use crate::series::{FrequencyGrid, Spectrogram, TimeGrid, TimeSeries};
use crate::window::{local_weights, NustConfig, WindowParams};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Power at a single `(tau, f)` cell.
///
/// `valid` is false when the localized fit is unusable: fewer effective
/// points than `min_ess`, an empty window, or a singular system. Invalid
/// cells report zero power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellPower {
    pub power: f64,
    pub ess: f64,
    pub valid: bool,
}

/// Evaluates one spectrogram cell.
pub fn nust_cell(
    config: &NustConfig,
    series: &TimeSeries,
    density: &DensityEstimate,
    tau: f64,
    freq: f64,
) -> CellPower {
    let params = config.window_params(series);
    let meas = series.measurement_weights();
    cell(
        &params,
        config.min_ess,
        series.times(),
        series.values(),
        &meas,
        density.eval(tau),
        tau,
        freq,
    )
}

#[allow(clippy::too_many_arguments)]
fn cell(
    params: &WindowParams,
    min_ess: f64,
    times: &[f64],
    values: &[f64],
    meas_weights: &[f64],
    density_at_tau: f64,
    tau: f64,
    freq: f64,
) -> CellPower {
    let local = local_weights(params, times, meas_weights, density_at_tau, tau, freq);
    if local.weights.is_empty() || local.weights.iter().sum::<f64>() <= 0.0 {
        return CellPower {
            power: 0.0,
            ess: 0.0,
            valid: false,
        };
    }
    let r = local.range;
    match weighted_sine_fit(&times[r.clone()], &values[r], &local.weights, freq) {
        Ok(fit) => {
            let valid = fit.ess >= min_ess && !fit.degenerate;
            CellPower {
                power: if valid { fit.power } else { 0.0 },
                ess: fit.ess,
                valid,
            }
        }
        Err(_) => CellPower {
            power: 0.0,
            ess: 0.0,
            valid: false,
        },
    }
}

/// Evaluates the full spectrogram over `time_grid x freq_grid`.
///
/// The sampling density is evaluated once per analysis epoch (the window
/// rule depends on `tau` only through it) and shared across frequencies.
/// The metadata records the configuration with its data-dependent
/// defaults resolved.
pub fn nust_spectrogram(
    config: &NustConfig,
    series: &TimeSeries,
    time_grid: &TimeGrid,
    freq_grid: &FrequencyGrid,
) -> Result<Spectrogram> {
    config.validate()?;
    let density = DensityEstimate::build(series, config.bandwidth)?;
    let params = config.window_params(series);
    let meas = series.measurement_weights();
    let rho: Vec<f64> = time_grid
        .values()
        .iter()
        .map(|&t| density.eval(t))
        .collect();

    let nt = time_grid.count();
    let nf = freq_grid.count();
    let mut power = alloc::vec![0.0; nt * nf];
    let mut valid = alloc::vec![false; nt * nf];

    let fill_row = |j: usize, prow: &mut [f64], vrow: &mut [bool]| {
        let tau = time_grid.values()[j];
        for (k, &f) in freq_grid.values().iter().enumerate() {
            let c = cell(
                &params,
                config.min_ess,
                series.times(),
                series.values(),
                &meas,
                rho[j],
                tau,
                f,
            );
            prow[k] = c.power;
            vrow[k] = c.valid;
        }
    };

    #[cfg(feature = "parallel")]
    power
        .par_chunks_mut(nf)
        .zip(valid.par_chunks_mut(nf))
        .enumerate()
        .for_each(|(j, (prow, vrow))| fill_row(j, prow, vrow));

    #[cfg(not(feature = "parallel"))]
    for (j, (prow, vrow)) in power.chunks_mut(nf).zip(valid.chunks_mut(nf)).enumerate() {
        fill_row(j, prow, vrow);
    }

    let meta = NustConfig {
        bandwidth: Some(density.bandwidth()),
        sigma_cap: Some(params.sigma_cap),
        ..config.clone()
    };
    Spectrogram::from_parts(
        time_grid.clone(),
        freq_grid.clone(),
        power,
        valid,
        Some(meta),
    )
}

/// Power rescaling applied before display or export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeMode {
    /// Leave powers untouched.
    None,
    /// Divide every valid power by the largest valid power (no-op when
    /// that maximum is zero).
    GlobalMax,
}

impl FromStr for NormalizeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(NormalizeMode::None),
            "global-max" => Ok(NormalizeMode::GlobalMax),
            _ => Err(Error::UnknownMode),
        }
    }
}

impl fmt::Display for NormalizeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizeMode::None => f.write_str("none"),
            NormalizeMode::GlobalMax => f.write_str("global-max"),
        }
    }
}

/// Applies a normalization mode, returning a new spectrogram.
pub fn normalize_power(spec: &Spectrogram, mode: NormalizeMode) -> Spectrogram {
    match mode {
        NormalizeMode::None => spec.clone(),
        NormalizeMode::GlobalMax => {
            let max = spec.max_valid_power();
            if max > 0.0 {
                spec.map_power(|p| p / max)
            } else {
                spec.clone()
            }
        }
    }
}

/// Parses a normalization mode, used by CLI and file layers.
pub fn parse_normalize_mode(s: &str) -> Result<NormalizeMode> {
    NormalizeMode::from_str(s)
}
