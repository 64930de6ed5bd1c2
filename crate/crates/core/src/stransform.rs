//! Reference discrete S-transform for uniformly sampled signals, used as
//! the ground-truth spectrogram when judging the adaptive method.
//!
//! The continuous transform (Stockwell, Mansinha & Lowe 1996) is
//!
//! ```text
//! S(tau, f) = Int x(t) * |f|/sqrt(2 pi) * exp(-(t - tau)^2 f^2 / 2)
//!                      * exp(-i 2 pi f t) dt
//! ```
//!
//! with a Gaussian window of standard deviation `1/|f|`. This module is a
//! direct `O(N * |tau| * |f|)` discretization of that integral — it is a
//! test oracle at desk scale, so clarity beats speed.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::nust::{normalize_power, NormalizeMode};
use crate::series::{FrequencyGrid, Spectrogram, TimeGrid, TimeSeries};

/// Relative deviation from the mean sample spacing tolerated before a
/// series is rejected as non-uniform.
const UNIFORM_SPACING_TOL: f64 = 1e-9;

/// Complex S-transform values on `time_grid x freq_grid`, row-major over
/// time, for samples `values[n]` taken at `t_n = n / sample_rate`.
pub fn stransform_complex(
    values: &[f64],
    sample_rate: f64,
    freq_grid: &FrequencyGrid,
    time_grid: &TimeGrid,
) -> Result<Vec<Complex64>> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if sample_rate <= 0.0 || !sample_rate.is_finite() {
        return Err(Error::BadRange);
    }
    let dt = 1.0 / sample_rate;
    let times: Vec<f64> = (0..values.len()).map(|n| n as f64 * dt).collect();
    Ok(transform_at_times(&times, values, dt, freq_grid, time_grid))
}

fn transform_at_times(
    times: &[f64],
    values: &[f64],
    dt: f64,
    freq_grid: &FrequencyGrid,
    time_grid: &TimeGrid,
) -> Vec<Complex64> {
    let nf = freq_grid.count();
    let mut out = alloc::vec![Complex64::new(0.0, 0.0); time_grid.count() * nf];
    for (j, &tau) in time_grid.values().iter().enumerate() {
        for (k, &f) in freq_grid.values().iter().enumerate() {
            let gauss_norm = f.abs() / (2.0 * PI).sqrt();
            let mut acc = Complex64::new(0.0, 0.0);
            for (&t, &x) in times.iter().zip(values) {
                let d = t - tau;
                let window = gauss_norm * (-0.5 * d * d * f * f).exp();
                let phase = 2.0 * PI * f * t;
                let (sin, cos) = phase.sin_cos();
                acc += Complex64::new(cos, -sin) * (x * window);
            }
            out[j * nf + k] = acc * dt;
        }
    }
    out
}

/// Power spectrogram `|S|^2`, globally max-normalized so the output
/// satisfies the `[0, 1]` power convention shared with the adaptive
/// engine. All cells are valid; the metadata slot is empty.
pub fn stransform(
    values: &[f64],
    sample_rate: f64,
    freq_grid: &FrequencyGrid,
    time_grid: &TimeGrid,
) -> Result<Spectrogram> {
    let complex = stransform_complex(values, sample_rate, freq_grid, time_grid)?;
    power_spectrogram(complex, freq_grid, time_grid)
}

/// S-transform of a uniformly sampled series, evaluated at the series'
/// own epochs. Rejects spacing that deviates from uniform by more than
/// one part in 1e9.
pub fn stransform_series(
    series: &TimeSeries,
    freq_grid: &FrequencyGrid,
    time_grid: &TimeGrid,
) -> Result<Spectrogram> {
    if series.len() < 2 {
        return Err(Error::NonUniformInput);
    }
    let times = series.times();
    let dt = series.span() / (series.len() - 1) as f64;
    for w in times.windows(2) {
        if ((w[1] - w[0]) - dt).abs() > UNIFORM_SPACING_TOL * dt {
            return Err(Error::NonUniformInput);
        }
    }
    let complex = transform_at_times(times, series.values(), dt, freq_grid, time_grid);
    power_spectrogram(complex, freq_grid, time_grid)
}

fn power_spectrogram(
    complex: Vec<Complex64>,
    freq_grid: &FrequencyGrid,
    time_grid: &TimeGrid,
) -> Result<Spectrogram> {
    let power: Vec<f64> = complex.iter().map(|s| s.norm_sqr()).collect();
    let valid = alloc::vec![true; power.len()];
    let spec = Spectrogram::from_parts(time_grid.clone(), freq_grid.clone(), power, valid, None)?;
    Ok(normalize_power(&spec, NormalizeMode::GlobalMax))
}
