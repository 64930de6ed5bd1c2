//! Binary PPM (P6) rasterization of spectrograms: time on the horizontal
//! axis, frequency increasing upward, masked cells in a flat dark blue.
//! No axes or colorbar — the output is for eyeballing, not publication.

use std::fs;
use std::io::Write;
use std::path::Path;

use nust_core::{normalize_power, NormalizeMode, Spectrogram};

use crate::error::CliError;

const MASKED_RGB: [u8; 3] = [30, 40, 90];

/// Writes the spectrogram as a self-contained lossless pixmap, one pixel
/// per grid cell. Output depends only on the input and mode.
pub fn render_heatmap(
    spec: &Spectrogram,
    path: impl AsRef<Path>,
    mode: NormalizeMode,
) -> Result<(), CliError> {
    fs::write(path, render_ppm(spec, mode))?;
    Ok(())
}

/// The raw PPM bytes (exposed for determinism tests).
pub fn render_ppm(spec: &Spectrogram, mode: NormalizeMode) -> Vec<u8> {
    let spec = normalize_power(spec, mode);
    let width = spec.time_grid().count();
    let height = spec.freq_grid().count();
    let mut out = Vec::with_capacity(width * height * 3 + 32);
    write!(out, "P6\n{width} {height}\n255\n").unwrap();
    for row in 0..height {
        let k = height - 1 - row; // highest frequency on top
        for j in 0..width {
            let rgb = if spec.is_valid(j, k) {
                colormap(spec.power(j, k))
            } else {
                MASKED_RGB
            };
            out.extend_from_slice(&rgb);
        }
    }
    out
}

/// Black -> ember -> white ramp over `[0, 1]`.
fn colormap(power: f64) -> [u8; 3] {
    let p = power.clamp(0.0, 1.0);
    let lerp = |a: f64, b: f64, t: f64| a + (b - a) * t;
    let (r, g, b) = if p < 0.5 {
        let t = p / 0.5;
        (lerp(0.0, 230.0, t), lerp(0.0, 110.0, t), lerp(0.0, 25.0, t))
    } else {
        let t = (p - 0.5) / 0.5;
        (
            lerp(230.0, 255.0, t),
            lerp(110.0, 255.0, t),
            lerp(25.0, 255.0, t),
        )
    };
    [r.round() as u8, g.round() as u8, b.round() as u8]
}

#[cfg(test)]
mod tests {
    use super::*;
    use nust_core::{FrequencyGrid, TimeGrid};

    fn spec(power: Vec<f64>, valid: Vec<bool>) -> Spectrogram {
        Spectrogram::from_parts(
            TimeGrid::new(0.0, 2.0, 3).unwrap(),
            FrequencyGrid::new(0.1, 0.3, 3).unwrap(),
            power,
            valid,
            None,
        )
        .unwrap()
    }

    #[test]
    fn all_zero_is_uniform_background() {
        let s = spec(vec![0.0; 9], vec![true; 9]);
        let ppm = render_ppm(&s, NormalizeMode::None);
        let pixels = &ppm[ppm.len() - 27..];
        assert!(pixels.iter().all(|&b| b == 0));
    }

    #[test]
    fn delta_cell_yields_one_white_pixel() {
        let mut power = vec![0.0; 9];
        power[4] = 1.0; // tau index 1, freq index 1
        let s = spec(power, vec![true; 9]);
        let ppm = render_ppm(&s, NormalizeMode::None);
        let pixels = &ppm[ppm.len() - 27..];
        let white: Vec<usize> = pixels
            .chunks(3)
            .enumerate()
            .filter(|(_, c)| c == &[255, 255, 255])
            .map(|(i, _)| i)
            .collect();
        // image row 1 (middle), column 1
        assert_eq!(white, vec![4]);
    }

    #[test]
    fn masked_cells_are_visually_distinct() {
        let s = spec(vec![0.0; 9], vec![false; 9]);
        let ppm = render_ppm(&s, NormalizeMode::None);
        let pixels = &ppm[ppm.len() - 27..];
        assert!(pixels.chunks(3).all(|c| c == MASKED_RGB));
    }

    #[test]
    fn byte_identical_across_runs() {
        let mut power = vec![0.0; 9];
        for (i, p) in power.iter_mut().enumerate() {
            *p = i as f64 / 10.0;
        }
        let s = spec(power, vec![true; 9]);
        assert_eq!(
            render_ppm(&s, NormalizeMode::GlobalMax),
            render_ppm(&s, NormalizeMode::GlobalMax)
        );
    }
}
