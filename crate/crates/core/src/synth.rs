//! Generators for the synthetic benchmark signals: gated tones, linear
//! chirps, a frequency-hop builder, non-uniform sampling, and calibrated
//! Gaussian noise injection. Everything is seeded and reproducible.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use rand::distr::Bernoulli;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::Normal;

use crate::error::{Error, Result};
use crate::series::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Tone,
    Chirp,
}

/// One additive signal component, active on `[t_on, t_off]` and zero
/// outside it.
///
/// Phase is referenced to the onset: a tone is `A sin(2 pi f (t - t_on))`
/// and a chirp sweeps linearly from `f_start` to `f_end` over its active
/// interval. Power-based detectors are phase-invariant, so the reference
/// point is unobservable downstream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Component {
    pub kind: ComponentKind,
    pub f_start: f64,
    pub f_end: f64,
    pub amplitude: f64,
    pub t_on: f64,
    pub t_off: f64,
}

impl Component {
    pub fn tone(freq: f64, amplitude: f64, t_on: f64, t_off: f64) -> Self {
        Self {
            kind: ComponentKind::Tone,
            f_start: freq,
            f_end: freq,
            amplitude,
            t_on,
            t_off,
        }
    }

    pub fn chirp(f_start: f64, f_end: f64, amplitude: f64, t_on: f64, t_off: f64) -> Self {
        Self {
            kind: ComponentKind::Chirp,
            f_start,
            f_end,
            amplitude,
            t_on,
            t_off,
        }
    }

    fn eval(&self, t: f64) -> f64 {
        if t < self.t_on || t > self.t_off {
            return 0.0;
        }
        let dt = t - self.t_on;
        let phase = match self.kind {
            ComponentKind::Tone => self.f_start * dt,
            ComponentKind::Chirp => {
                let rate = (self.f_end - self.f_start) / (self.t_off - self.t_on);
                self.f_start * dt + 0.5 * rate * dt * dt
            }
        };
        self.amplitude * (2.0 * PI * phase).sin()
    }
}

/// A synthetic signal: a sum of gated components over a finite duration.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalSpec {
    components: Vec<Component>,
    duration: f64,
}

impl SignalSpec {
    pub fn new(components: Vec<Component>, duration: f64) -> Result<Self> {
        if duration <= 0.0 || !duration.is_finite() {
            return Err(Error::InvalidConfig("duration must be positive"));
        }
        for c in &components {
            if !c.t_on.is_finite()
                || !c.t_off.is_finite()
                || c.t_on < 0.0
                || c.t_on >= c.t_off
                || c.t_off > duration
            {
                return Err(Error::InvalidConfig(
                    "component interval must satisfy 0 <= t_on < t_off <= duration",
                ));
            }
            if c.amplitude < 0.0 || !c.amplitude.is_finite() {
                return Err(Error::InvalidConfig("amplitude must be non-negative"));
            }
            if c.f_start <= 0.0 || c.f_end <= 0.0 || !c.f_start.is_finite() || !c.f_end.is_finite()
            {
                return Err(Error::InvalidConfig("frequencies must be positive"));
            }
        }
        Ok(Self {
            components,
            duration,
        })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    /// Signal value at time `t`: the sum over active components.
    pub fn eval(&self, t: f64) -> f64 {
        if !t.is_finite() {
            return 0.0;
        }
        self.components.iter().map(|c| c.eval(t)).sum()
    }
}

/// A sampling-rate modifier: epochs inside `[start, end]` are kept
/// independently with probability `keep_probability`.
///
/// With probability zero this is an observation gap (a seasonal window
/// no telescope covered); with an intermediate value it produces the
/// deliberately sparse coverage used to stress density adaptation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thinning {
    pub start: f64,
    pub end: f64,
    pub keep_probability: f64,
}

impl Thinning {
    pub fn new(start: f64, end: f64, keep_probability: f64) -> Result<Self> {
        if !start.is_finite() || !end.is_finite() || start >= end {
            return Err(Error::InvalidConfig(
                "thinning interval must have start < end",
            ));
        }
        if !(0.0..=1.0).contains(&keep_probability) {
            return Err(Error::InvalidConfig("keep_probability must lie in [0, 1]"));
        }
        Ok(Self {
            start,
            end,
            keep_probability,
        })
    }
}

/// Draws `n` i.i.d. uniform epochs over `[0, duration]`, sorts and
/// deduplicates them, optionally thins an interval, and evaluates the
/// signal at the surviving epochs. Noiseless output carries no
/// uncertainties (unit weights downstream).
///
/// `n` counts the epochs drawn before thinning. Reproducible per seed.
pub fn sample_nonuniform(
    spec: &SignalSpec,
    n: usize,
    seed: u64,
    thinning: Option<&Thinning>,
) -> Result<TimeSeries> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut epochs: Vec<f64> = (0..n)
        .map(|_| rng.random_range(0.0..spec.duration))
        .collect();
    epochs.sort_by(f64::total_cmp);
    epochs.dedup();
    if let Some(th) = thinning {
        let keep = Bernoulli::new(th.keep_probability)
            .map_err(|_| Error::InvalidConfig("keep_probability must lie in [0, 1]"))?;
        epochs.retain(|&t| t < th.start || t > th.end || keep.sample(&mut rng));
    }
    let values: Vec<f64> = epochs.iter().map(|&t| spec.eval(t)).collect();
    TimeSeries::new(epochs, values, None)
}

/// Adds i.i.d. zero-mean Gaussian noise calibrated to a target SNR.
///
/// The noise level is `sigma_n = rms / snr` with the RMS taken over the
/// samples where the signal is non-zero (gated components leave silent
/// stretches that would otherwise dilute the level). The returned series
/// has the same epochs and carries `sigma_n` as its per-point
/// uncertainty.
pub fn add_noise(series: &TimeSeries, snr: f64, seed: u64) -> Result<TimeSeries> {
    if snr <= 0.0 || !snr.is_finite() {
        return Err(Error::NonPositiveSnr);
    }
    let mut sum_sq = 0.0;
    let mut active = 0usize;
    for &y in series.values() {
        if y != 0.0 {
            sum_sq += y * y;
            active += 1;
        }
    }
    if active == 0 {
        return Err(Error::NonPositiveSnr);
    }
    let rms = (sum_sq / active as f64).sqrt();
    let sigma_n = rms / snr;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, sigma_n).map_err(|_| Error::NonPositiveSnr)?;
    let values: Vec<f64> = series
        .values()
        .iter()
        .map(|&y| y + normal.sample(&mut rng))
        .collect();
    TimeSeries::new(
        series.times().to_vec(),
        values,
        Some(alloc::vec![sigma_n; series.len()]),
    )
}

/// Builds a piecewise-tone signal that jumps between `freqs` at the given
/// switch times, covering `[0, duration]` contiguously with amplitude 1.
pub fn freq_hop_signal(freqs: &[f64], switch_times: &[f64], duration: f64) -> Result<SignalSpec> {
    if freqs.len() != switch_times.len() + 1 {
        return Err(Error::BadSwitchTimes);
    }
    let mut boundaries = Vec::with_capacity(switch_times.len() + 2);
    boundaries.push(0.0);
    boundaries.extend_from_slice(switch_times);
    boundaries.push(duration);
    if boundaries
        .windows(2)
        .any(|w| w[0].is_nan() || w[1].is_nan() || w[0] >= w[1])
    {
        return Err(Error::BadSwitchTimes);
    }
    let components = freqs
        .iter()
        .zip(boundaries.windows(2))
        .map(|(&f, w)| Component::tone(f, 1.0, w[0], w[1]))
        .collect();
    SignalSpec::new(components, duration)
}

/// Three disjoint gated tones: 0.07 c/d (amplitude 0.9) on 20-70 d,
/// 0.25 c/d (amplitude 1.0) on 100-140 d, and 0.15 c/d (amplitude 0.8)
/// on 180-210 d, over a 250-day record.
pub fn multi_transient() -> SignalSpec {
    SignalSpec::new(
        alloc::vec![
            Component::tone(0.07, 0.9, 20.0, 70.0),
            Component::tone(0.25, 1.0, 100.0, 140.0),
            Component::tone(0.15, 0.8, 180.0, 210.0),
        ],
        250.0,
    )
    .expect("catalog signal is valid")
}

/// A unit-amplitude chirp sweeping 0.1 -> 0.2 c/d over 50-150 d of a
/// 200-day record.
pub fn transient_chirp() -> SignalSpec {
    SignalSpec::new(
        alloc::vec![Component::chirp(0.1, 0.2, 1.0, 50.0, 150.0)],
        200.0,
    )
    .expect("catalog signal is valid")
}

/// A short 0.4 c/d burst on 95-105 d of a 200-day record.
pub fn transient_burst() -> SignalSpec {
    SignalSpec::new(alloc::vec![Component::tone(0.4, 1.0, 95.0, 105.0)], 200.0)
        .expect("catalog signal is valid")
}

/// Sampling modifier that pairs with [`transient_burst`]: epochs inside
/// the burst are kept with probability 0.3, creating the sparse coverage
/// regime the adaptive window targets.
pub fn burst_thinning() -> Thinning {
    Thinning::new(95.0, 105.0, 0.3).expect("catalog thinning is valid")
}

/// A coherent 0.08 c/d tone spanning a 240-day record. Pair with
/// [`central_gap`] to cut all observations from the central 80-160 d
/// window; the tone itself stays phase-coherent across the gap.
pub fn gapped_tone() -> SignalSpec {
    SignalSpec::new(alloc::vec![Component::tone(0.08, 1.0, 0.0, 240.0)], 240.0)
        .expect("catalog signal is valid")
}

/// Observation gap over 80-160 d (keep probability zero).
pub fn central_gap() -> Thinning {
    Thinning::new(80.0, 160.0, 0.0).expect("catalog thinning is valid")
}
