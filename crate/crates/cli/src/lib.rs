//! File formats, rasterization, and the command-line front end for the
//! adaptive spectrogram library.

mod cli;
mod error;
mod render;
mod series_csv;
mod spectrogram_file;

pub use cli::cli_main;
pub use error::CliError;
pub use render::{render_heatmap, render_ppm};
pub use series_csv::{parse_series, read_series, write_series, write_two_column_csv};
pub use spectrogram_file::{
    parse_spectrogram, read_spectrogram, spectrogram_to_string, write_spectrogram,
    SPECTROGRAM_MAGIC,
};
