//! Shared domain types: time series, evaluation grids, and power containers.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::window::NustConfig;

/// Relative spacing deviation tolerated when reconstructing a grid from
/// raw values (e.g. after a file round trip).
const GRID_UNIFORMITY_TOL: f64 = 1e-9;

/// A non-uniformly sampled time series `(t_i, y_i, sigma_i)`.
///
/// Epochs are strictly increasing and all entries finite. Uncertainties
/// are optional; when absent every point gets unit measurement weight,
/// which reduces the weighted fits to ordinary least squares.
///
/// Immutable after construction and safe to share across workers.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    times: Vec<f64>,
    values: Vec<f64>,
    uncertainties: Option<Vec<f64>>,
}

impl TimeSeries {
    /// Builds a validated series, sorting samples by epoch.
    ///
    /// The sort permutes values and uncertainties consistently with the
    /// epochs. Duplicate epochs are rejected rather than merged: merging
    /// would need an uncertainty-combination policy with no principled
    /// default.
    pub fn new(times: Vec<f64>, values: Vec<f64>, uncertainties: Option<Vec<f64>>) -> Result<Self> {
        if times.is_empty() {
            return Err(Error::EmptyInput);
        }
        if values.len() != times.len() {
            return Err(Error::LengthMismatch {
                expected: times.len(),
                actual: values.len(),
            });
        }
        if let Some(sigmas) = &uncertainties {
            if sigmas.len() != times.len() {
                return Err(Error::LengthMismatch {
                    expected: times.len(),
                    actual: sigmas.len(),
                });
            }
        }
        let finite = times.iter().chain(values.iter()).all(|v| v.is_finite())
            && uncertainties
                .iter()
                .flat_map(|s| s.iter())
                .all(|v| v.is_finite());
        if !finite {
            return Err(Error::NonFinite);
        }
        if let Some(sigmas) = &uncertainties {
            if sigmas.iter().any(|&s| s <= 0.0) {
                return Err(Error::NonPositiveUncertainty);
            }
        }

        let mut order: Vec<usize> = (0..times.len()).collect();
        order.sort_by(|&a, &b| times[a].total_cmp(&times[b]));
        let times: Vec<f64> = order.iter().map(|&i| times[i]).collect();
        let values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
        let uncertainties =
            uncertainties.map(|s| order.iter().map(|&i| s[i]).collect::<Vec<f64>>());

        if times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonMonotonic);
        }

        Ok(Self {
            times,
            values,
            uncertainties,
        })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn uncertainties(&self) -> Option<&[f64]> {
        self.uncertainties.as_deref()
    }

    /// Observation span `t_N - t_1` (zero for a single sample).
    pub fn span(&self) -> f64 {
        self.times[self.times.len() - 1] - self.times[0]
    }

    /// Per-point measurement weights `1 / sigma_i^2` (unit weights when
    /// no uncertainties are attached).
    pub fn measurement_weights(&self) -> Vec<f64> {
        match &self.uncertainties {
            Some(sigmas) => sigmas.iter().map(|&s| 1.0 / (s * s)).collect(),
            None => alloc::vec![1.0; self.times.len()],
        }
    }
}

fn linspace(min: f64, max: f64, count: usize) -> Result<Vec<f64>> {
    if !min.is_finite() || !max.is_finite() || min >= max {
        return Err(Error::BadRange);
    }
    if count < 2 {
        return Err(Error::CountTooSmall);
    }
    let step = (max - min) / (count - 1) as f64;
    let mut values: Vec<f64> = (0..count).map(|i| min + step * i as f64).collect();
    // endpoints are bit-exact inputs
    values[0] = min;
    values[count - 1] = max;
    Ok(values)
}

fn check_uniform(values: &[f64]) -> Result<()> {
    if values.len() < 2 {
        return Err(Error::CountTooSmall);
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonMonotonic);
    }
    let step = (values[values.len() - 1] - values[0]) / (values.len() - 1) as f64;
    for w in values.windows(2) {
        if ((w[1] - w[0]) - step).abs() > GRID_UNIFORMITY_TOL * step {
            return Err(Error::NonUniformGrid);
        }
    }
    Ok(())
}

/// A uniform grid of trial frequencies in cycles per day.
///
/// `f = 0` is excluded: the frequency-scaled window width diverges there.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    values: Vec<f64>,
}

impl FrequencyGrid {
    pub fn new(f_min: f64, f_max: f64, count: usize) -> Result<Self> {
        if f_min <= 0.0 {
            return Err(Error::BadRange);
        }
        Ok(Self {
            values: linspace(f_min, f_max, count)?,
        })
    }

    /// Rebuilds a grid from raw values (file ingestion path).
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        check_uniform(&values)?;
        if values[0] <= 0.0 {
            return Err(Error::BadRange);
        }
        Ok(Self { values })
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn count(&self) -> usize {
        self.values.len()
    }

    pub fn step(&self) -> f64 {
        (self.max() - self.min()) / (self.values.len() - 1) as f64
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Index of the grid frequency closest to `f`.
    pub fn nearest_index(&self, f: f64) -> usize {
        nearest(&self.values, f)
    }
}

/// A uniform grid of analysis epochs (days).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    values: Vec<f64>,
}

impl TimeGrid {
    pub fn new(tau_min: f64, tau_max: f64, count: usize) -> Result<Self> {
        Ok(Self {
            values: linspace(tau_min, tau_max, count)?,
        })
    }

    /// Grid over the data support `[t_1, t_N]`; epochs outside it have
    /// near-zero sampling density and produce meaningless fits.
    pub fn over_series(series: &TimeSeries, count: usize) -> Result<Self> {
        Self::new(series.times()[0], series.times()[series.len() - 1], count)
    }

    /// Rebuilds a grid from raw values (file ingestion path).
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        check_uniform(&values)?;
        Ok(Self { values })
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn count(&self) -> usize {
        self.values.len()
    }

    pub fn step(&self) -> f64 {
        (self.max() - self.min()) / (self.values.len() - 1) as f64
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn nearest_index(&self, tau: f64) -> usize {
        nearest(&self.values, tau)
    }
}

fn nearest(values: &[f64], x: f64) -> usize {
    let mut best = 0;
    let mut dist = f64::INFINITY;
    for (i, &v) in values.iter().enumerate() {
        let d = (v - x).abs();
        if d < dist {
            dist = d;
            best = i;
        }
    }
    best
}

/// Normalized spectral power over a frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Periodogram {
    grid: FrequencyGrid,
    power: Vec<f64>,
}

impl Periodogram {
    pub fn from_parts(grid: FrequencyGrid, power: Vec<f64>) -> Result<Self> {
        if power.len() != grid.count() {
            return Err(Error::LengthMismatch {
                expected: grid.count(),
                actual: power.len(),
            });
        }
        Ok(Self { grid, power })
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn power(&self) -> &[f64] {
        &self.power
    }

    /// `(frequency, power)` of the strongest peak.
    pub fn peak(&self) -> (f64, f64) {
        let mut best = 0;
        for k in 1..self.power.len() {
            if self.power[k] > self.power[best] {
                best = k;
            }
        }
        (self.grid.values()[best], self.power[best])
    }
}

/// Time-frequency power matrix with a per-cell validity mask.
///
/// Storage is row-major over time: cell `(j, k)` holds the power at
/// `(tau_j, f_k)`. Cells where the localized fit was degenerate (too few
/// effective points, singular system) are masked invalid and carry power
/// zero so downstream normalization and serialization stay total.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrogram {
    time_grid: TimeGrid,
    freq_grid: FrequencyGrid,
    power: Vec<f64>,
    valid: Vec<bool>,
    meta: Option<NustConfig>,
}

impl Spectrogram {
    pub fn from_parts(
        time_grid: TimeGrid,
        freq_grid: FrequencyGrid,
        power: Vec<f64>,
        valid: Vec<bool>,
        meta: Option<NustConfig>,
    ) -> Result<Self> {
        let cells = time_grid.count() * freq_grid.count();
        if power.len() != cells {
            return Err(Error::LengthMismatch {
                expected: cells,
                actual: power.len(),
            });
        }
        if valid.len() != cells {
            return Err(Error::LengthMismatch {
                expected: cells,
                actual: valid.len(),
            });
        }
        Ok(Self {
            time_grid,
            freq_grid,
            power,
            valid,
            meta,
        })
    }

    pub fn time_grid(&self) -> &TimeGrid {
        &self.time_grid
    }

    pub fn freq_grid(&self) -> &FrequencyGrid {
        &self.freq_grid
    }

    pub fn power(&self, j: usize, k: usize) -> f64 {
        self.power[j * self.freq_grid.count() + k]
    }

    pub fn is_valid(&self, j: usize, k: usize) -> bool {
        self.valid[j * self.freq_grid.count() + k]
    }

    /// Power values at analysis epoch `tau_j`, one per frequency.
    pub fn time_row(&self, j: usize) -> &[f64] {
        let nf = self.freq_grid.count();
        &self.power[j * nf..(j + 1) * nf]
    }

    pub fn valid_row(&self, j: usize) -> &[bool] {
        let nf = self.freq_grid.count();
        &self.valid[j * nf..(j + 1) * nf]
    }

    pub fn power_data(&self) -> &[f64] {
        &self.power
    }

    pub fn valid_data(&self) -> &[bool] {
        &self.valid
    }

    pub fn meta(&self) -> Option<&NustConfig> {
        self.meta.as_ref()
    }

    /// Largest power among valid cells, or 0 when none are valid.
    pub fn max_valid_power(&self) -> f64 {
        self.power
            .iter()
            .zip(&self.valid)
            .filter(|(_, &v)| v)
            .map(|(&p, _)| p)
            .fold(0.0, f64::max)
    }

    pub(crate) fn map_power<F: Fn(f64) -> f64>(&self, f: F) -> Self {
        let power = self
            .power
            .iter()
            .zip(&self.valid)
            .map(|(&p, &v)| if v { f(p) } else { p })
            .collect();
        Self {
            time_grid: self.time_grid.clone(),
            freq_grid: self.freq_grid.clone(),
            power,
            valid: self.valid.clone(),
            meta: self.meta.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn construction_sorts_all_columns() {
        let ts = TimeSeries::new(
            vec![2.0, 1.0, 3.0],
            vec![20.0, 10.0, 30.0],
            Some(vec![0.2, 0.1, 0.3]),
        )
        .unwrap();
        assert_eq!(ts.times(), &[1.0, 2.0, 3.0]);
        assert_eq!(ts.values(), &[10.0, 20.0, 30.0]);
        assert_eq!(ts.uncertainties().unwrap(), &[0.1, 0.2, 0.3]);
    }

    #[test]
    fn duplicate_epochs_rejected() {
        let err = TimeSeries::new(vec![1.0, 1.0], vec![0.0, 0.0], None).unwrap_err();
        assert_eq!(err, Error::NonMonotonic);
    }

    #[test]
    fn construction_is_idempotent() {
        let ts = TimeSeries::new(vec![1.0, 2.0, 5.0], vec![1.0, -1.0, 0.5], None).unwrap();
        let again = TimeSeries::new(ts.times().to_vec(), ts.values().to_vec(), None).unwrap();
        assert_eq!(ts, again);
    }

    #[test]
    fn single_sample_ok() {
        let ts = TimeSeries::new(vec![4.5], vec![1.0], None).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts.span(), 0.0);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            TimeSeries::new(vec![], vec![], None).unwrap_err(),
            Error::EmptyInput
        );
        assert_eq!(
            TimeSeries::new(vec![1.0], vec![1.0, 2.0], None).unwrap_err(),
            Error::LengthMismatch {
                expected: 1,
                actual: 2
            }
        );
        assert_eq!(
            TimeSeries::new(vec![1.0, f64::NAN], vec![0.0, 0.0], None).unwrap_err(),
            Error::NonFinite
        );
        assert_eq!(
            TimeSeries::new(vec![1.0], vec![1.0], Some(vec![0.0])).unwrap_err(),
            Error::NonPositiveUncertainty
        );
    }

    #[test]
    fn linspace_endpoints_only() {
        let g = TimeGrid::new(0.0, 1.0, 2).unwrap();
        assert_eq!(g.values(), &[0.0, 1.0]);
    }

    #[test]
    fn linspace_exact_step() {
        // (0.30 - 0.05) / 250 = 0.001 in f64
        let g = FrequencyGrid::new(0.05, 0.30, 251).unwrap();
        assert_eq!(g.step(), 0.001);
        assert_eq!(g.min(), 0.05);
        assert_eq!(g.max(), 0.30);
        assert!(g.values().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn linspace_bad_range() {
        assert_eq!(TimeGrid::new(1.0, 0.5, 10).unwrap_err(), Error::BadRange);
        assert_eq!(
            FrequencyGrid::new(0.0, 0.5, 10).unwrap_err(),
            Error::BadRange
        );
        assert_eq!(
            FrequencyGrid::new(0.1, 0.5, 1).unwrap_err(),
            Error::CountTooSmall
        );
    }

    #[test]
    fn grid_from_values_round_trips() {
        let g = FrequencyGrid::new(0.01, 0.3, 113).unwrap();
        let back = FrequencyGrid::from_values(g.values().to_vec()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn grid_from_values_rejects_nonuniform() {
        assert_eq!(
            TimeGrid::from_values(vec![0.0, 1.0, 3.0]).unwrap_err(),
            Error::NonUniformGrid
        );
    }
}
