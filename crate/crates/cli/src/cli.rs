//! Command-line interface. Exit codes: 0 success, 1 usage error, 2 data
//! or I/O error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use nust_core::{
    add_noise, burst_thinning, central_gap, freq_hop_signal, gapped_tone, gls_periodogram,
    multi_transient, normalize_power, nust_spectrogram, sample_nonuniform, stransform_series,
    transient_burst, transient_chirp, DensityEstimate, FrequencyGrid, NormalizeMode, NustConfig,
    SignalSpec, Thinning, TimeGrid,
};

use crate::error::CliError;
use crate::render::render_heatmap;
use crate::series_csv::{read_series, write_series, write_two_column_csv};
use crate::spectrogram_file::{read_spectrogram, write_spectrogram};

#[derive(Parser)]
#[command(
    name = "nust",
    version,
    about = "Adaptive time-frequency analysis for non-uniformly sampled time series",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FreqArgs {
    /// Lowest trial frequency (cycles/day, > 0)
    #[arg(long)]
    fmin: f64,
    /// Highest trial frequency (cycles/day)
    #[arg(long)]
    fmax: f64,
    /// Number of frequency grid points
    #[arg(long, default_value_t = 250)]
    nfreq: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Global least-squares periodogram; writes a frequency,power CSV
    Gls {
        /// Input series CSV: time,value[,uncertainty]
        input: PathBuf,
        #[command(flatten)]
        freq: FreqArgs,
        /// Output CSV path
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Adaptive spectrogram; writes a spectrogram text file
    Nust {
        /// Input series CSV: time,value[,uncertainty]
        input: PathBuf,
        #[command(flatten)]
        freq: FreqArgs,
        /// Number of analysis epochs spanning the data support
        #[arg(long, default_value_t = 200)]
        ntau: usize,
        /// Baseline window scale
        #[arg(long, default_value_t = 0.18)]
        alpha: f64,
        /// Density sensitivity exponent (0 disables density adaptation)
        #[arg(long, default_value_t = 0.5)]
        gamma: f64,
        /// Density bandwidth in days (default: Silverman's rule)
        #[arg(long)]
        bandwidth: Option<f64>,
        /// Maximum window width in days (default: observation span)
        #[arg(long)]
        sigma_cap: Option<f64>,
        /// Effective-sample-size threshold for a cell to count as valid
        #[arg(long, default_value_t = 4.0)]
        min_ess: f64,
        /// Power scaling: none | global-max
        #[arg(long, default_value = "none", value_parser = nust_core::nust::parse_normalize_mode)]
        normalize: NormalizeMode,
        /// Output spectrogram path
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Reference S-transform of a uniformly sampled series
    Stransform {
        /// Input series CSV with uniform spacing
        input: PathBuf,
        #[command(flatten)]
        freq: FreqArgs,
        /// Number of analysis epochs spanning the data support
        #[arg(long, default_value_t = 200)]
        ntau: usize,
        /// Power scaling: none | global-max
        #[arg(long, default_value = "none", value_parser = nust_core::nust::parse_normalize_mode)]
        normalize: NormalizeMode,
        /// Output spectrogram path
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Sampling-density estimate on a probe grid; writes a time,density CSV
    Density {
        /// Input series CSV
        input: PathBuf,
        /// Kernel bandwidth in days (default: Silverman's rule)
        #[arg(long)]
        bandwidth: Option<f64>,
        /// Number of probe epochs spanning the data support
        #[arg(long, default_value_t = 200)]
        ntau: usize,
        /// Output CSV path
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Generate a synthetic benchmark series as CSV
    Synth {
        /// Which signal: 1 (multi-transient), 2 (chirp), 3 (burst,
        /// sparsely sampled), 4 (tone with a central observation gap),
        /// hop (frequency jump)
        #[arg(long, value_parser = parse_signal)]
        signal: SignalChoice,
        /// Number of epochs drawn (before any thinning)
        #[arg(long, default_value_t = 200)]
        n: usize,
        /// Random seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Optional signal-to-noise ratio; adds calibrated Gaussian noise
        #[arg(long)]
        snr: Option<f64>,
        /// Output CSV path
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Rasterize a spectrogram file to a binary PPM heatmap
    Render {
        /// Input spectrogram file
        input: PathBuf,
        /// Power scaling: none | global-max
        #[arg(long, default_value = "none", value_parser = nust_core::nust::parse_normalize_mode)]
        normalize: NormalizeMode,
        /// Output PPM path
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SignalChoice {
    MultiTransient,
    Chirp,
    Burst,
    GappedTone,
    FreqHop,
}

fn parse_signal(s: &str) -> Result<SignalChoice, String> {
    match s {
        "1" => Ok(SignalChoice::MultiTransient),
        "2" => Ok(SignalChoice::Chirp),
        "3" => Ok(SignalChoice::Burst),
        "4" => Ok(SignalChoice::GappedTone),
        "hop" => Ok(SignalChoice::FreqHop),
        other => Err(format!(
            "unknown signal `{other}` (expected 1, 2, 3, 4, or hop)"
        )),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gls {
            input,
            freq,
            output,
        } => {
            let series = read_series(&input)?;
            let grid = FrequencyGrid::new(freq.fmin, freq.fmax, freq.nfreq)?;
            let pg = gls_periodogram(&series, &grid)?;
            write_two_column_csv(
                &output,
                "frequency,power",
                grid.values()
                    .iter()
                    .copied()
                    .zip(pg.power().iter().copied()),
            )
        }
        Command::Nust {
            input,
            freq,
            ntau,
            alpha,
            gamma,
            bandwidth,
            sigma_cap,
            min_ess,
            normalize,
            output,
        } => {
            let series = read_series(&input)?;
            let freq_grid = FrequencyGrid::new(freq.fmin, freq.fmax, freq.nfreq)?;
            let time_grid = TimeGrid::over_series(&series, ntau)?;
            let config = NustConfig {
                alpha,
                gamma,
                bandwidth,
                sigma_cap,
                min_ess,
                ..NustConfig::default()
            };
            let spec = nust_spectrogram(&config, &series, &time_grid, &freq_grid)?;
            write_spectrogram(&normalize_power(&spec, normalize), &output)
        }
        Command::Stransform {
            input,
            freq,
            ntau,
            normalize,
            output,
        } => {
            let series = read_series(&input)?;
            let freq_grid = FrequencyGrid::new(freq.fmin, freq.fmax, freq.nfreq)?;
            let time_grid = TimeGrid::over_series(&series, ntau)?;
            let spec = stransform_series(&series, &freq_grid, &time_grid)?;
            write_spectrogram(&normalize_power(&spec, normalize), &output)
        }
        Command::Density {
            input,
            bandwidth,
            ntau,
            output,
        } => {
            let series = read_series(&input)?;
            let density = DensityEstimate::build(&series, bandwidth)?;
            let grid = TimeGrid::over_series(&series, ntau)?;
            write_two_column_csv(
                &output,
                "time,density",
                grid.values().iter().map(|&t| (t, density.eval(t))),
            )
        }
        Command::Synth {
            signal,
            n,
            seed,
            snr,
            output,
        } => {
            let (spec, thinning): (SignalSpec, Option<Thinning>) = match signal {
                SignalChoice::MultiTransient => (multi_transient(), None),
                SignalChoice::Chirp => (transient_chirp(), None),
                SignalChoice::Burst => (transient_burst(), Some(burst_thinning())),
                SignalChoice::GappedTone => (gapped_tone(), Some(central_gap())),
                SignalChoice::FreqHop => (freq_hop_signal(&[0.1, 0.3], &[100.0], 200.0)?, None),
            };
            let mut series = sample_nonuniform(&spec, n, seed, thinning.as_ref())?;
            if let Some(snr) = snr {
                // separate stream so noise draws do not replay epoch draws
                series = add_noise(&series, snr, seed.wrapping_add(1))?;
            }
            write_series(&output, &series)
        }
        Command::Render {
            input,
            normalize,
            output,
        } => {
            let spec = read_spectrogram(&input)?;
            render_heatmap(&spec, &output, normalize)
        }
    }
}
