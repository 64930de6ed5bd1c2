//! Density-adaptive time-frequency analysis for non-uniformly sampled
//! time series.
//!
//! Unevenly sampled records (astronomical surveys, monitoring networks)
//! defeat FFT-based spectrograms, while the classic least-squares
//! periodogram integrates over all time and hides transients. This crate
//! combines the two: at every point of a time-frequency grid it fits a
//! sinusoid-plus-offset model under Gaussian window weights whose width
//! adapts to both the trial frequency and the local sampling density, so
//! the analysis narrows where data is dense and stretches where it is
//! sparse.
//!
//! What's here:
//!
//! - [`gls`]: the weighted sinusoid fit and the global periodogram.
//! - [`density`]: Gaussian kernel density estimation of the sample epochs.
//! - [`window`]: the doubly adaptive window and combined per-point weights.
//! - [`nust`]: the spectrogram engine with per-cell validity masking.
//! - [`stransform`]: a reference S-transform for uniform data, used as
//!   ground truth in comparisons.
//! - [`synth`]: seeded generators for benchmark signals, non-uniform
//!   sampling, and calibrated noise.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default features
//! enable `std` and rayon-based parallel grid evaluation. Grid output is
//! placed by index, so serial and parallel runs are bitwise identical.
//!
//! ```
//! use nust_core::{
//!     gls_periodogram, nust_spectrogram, sample_nonuniform, transient_burst,
//!     FrequencyGrid, NustConfig, TimeGrid,
//! };
//!
//! let series = sample_nonuniform(&transient_burst(), 200, 42, None)?;
//! let freqs = FrequencyGrid::new(0.05, 0.5, 150)?;
//! let taus = TimeGrid::over_series(&series, 150)?;
//!
//! let periodogram = gls_periodogram(&series, &freqs)?;
//! let spectrogram = nust_spectrogram(&NustConfig::default(), &series, &taus, &freqs)?;
//!
//! // The ten-day burst is diluted in the time-integrated periodogram but
//! // stands out in the localized analysis.
//! assert!(spectrogram.max_valid_power() > periodogram.peak().1);
//! # Ok::<(), nust_core::Error>(())
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod density;
pub mod error;
pub mod gls;
pub mod nust;
pub mod series;
pub mod stransform;
pub mod synth;
pub mod window;

pub use density::{silverman_bandwidth, DensityEstimate};
pub use error::{Error, Result};
pub use gls::{gls_periodogram, weighted_sine_fit, FitResult};
pub use num_complex::Complex64;
pub use nust::{normalize_power, nust_cell, nust_spectrogram, CellPower, NormalizeMode};
pub use series::{FrequencyGrid, Periodogram, Spectrogram, TimeGrid, TimeSeries};
pub use stransform::{stransform, stransform_complex, stransform_series};
pub use synth::{
    add_noise, burst_thinning, central_gap, freq_hop_signal, gapped_tone, multi_transient,
    sample_nonuniform, transient_burst, transient_chirp, Component, ComponentKind, SignalSpec,
    Thinning,
};
pub use window::{adaptive_sigma, window_weights, NustConfig, WindowParams, WindowWeights};
