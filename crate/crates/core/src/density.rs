//! Gaussian kernel density estimation of the sampling density over the
//! observation span.
//!
//! The estimate at time `t` is `rho(t) = 1/(N h) * sum_i K((t - t_i)/h)`
//! with a Gaussian kernel. Evaluation is exact (all `N` terms, no tree
//! acceleration or truncation); the sample counts in scope make the
//! literal sum cheap and easy to test against.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::series::TimeSeries;

/// Frozen Gaussian-kernel density estimate of the sample epochs.
///
/// Deterministic given `(sample_times, bandwidth)`; evaluation is pure
/// and concurrently callable.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityEstimate {
    times: Vec<f64>,
    bandwidth: f64,
}

impl DensityEstimate {
    /// Builds the estimate, defaulting the bandwidth to Silverman's rule
    /// when none is given.
    pub fn build(series: &TimeSeries, bandwidth: Option<f64>) -> Result<Self> {
        let bandwidth = match bandwidth {
            Some(h) => {
                if h <= 0.0 || !h.is_finite() {
                    return Err(Error::NonPositiveBandwidth);
                }
                h
            }
            None => silverman_bandwidth(series.times())?,
        };
        Ok(Self {
            times: series.times().to_vec(),
            bandwidth,
        })
    }

    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    pub fn sample_times(&self) -> &[f64] {
        &self.times
    }

    /// Density in 1/days at time `t`. Non-negative everywhere; epochs far
    /// outside the span underflow smoothly to zero.
    pub fn eval(&self, t: f64) -> f64 {
        let h = self.bandwidth;
        let norm = 1.0 / (self.times.len() as f64 * h * (2.0 * core::f64::consts::PI).sqrt());
        let mut sum = 0.0;
        for &ti in &self.times {
            let u = (t - ti) / h;
            sum += (-0.5 * u * u).exp();
        }
        norm * sum
    }
}

/// Silverman's rule-of-thumb bandwidth `1.06 * s * N^(-1/5)` with `s` the
/// sample standard deviation of the epochs.
///
/// Fails for degenerate epoch sets (a single sample) where the rule has
/// no spread to work with; pass an explicit bandwidth instead.
pub fn silverman_bandwidth(times: &[f64]) -> Result<f64> {
    let n = times.len();
    if n < 2 {
        return Err(Error::NonPositiveBandwidth);
    }
    let mean = times.iter().sum::<f64>() / n as f64;
    let var = times.iter().map(|&t| (t - mean) * (t - mean)).sum::<f64>() / (n - 1) as f64;
    let h = 1.06 * var.sqrt() * (n as f64).powf(-0.2);
    if h > 0.0 {
        Ok(h)
    } else {
        Err(Error::NonPositiveBandwidth)
    }
}
