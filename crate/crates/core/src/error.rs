use core::fmt;

/// Errors produced while validating inputs or configurations.
///
/// Numerical degeneracies encountered during grid evaluation (singular
/// fits, empty windows) are *not* errors; they are reported through the
/// spectrogram validity mask instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A series, grid, or sample request with zero elements.
    EmptyInput,
    /// Parallel arrays of different lengths.
    LengthMismatch { expected: usize, actual: usize },
    /// NaN or infinity in sample data.
    NonFinite,
    /// Duplicate or out-of-order epochs after sorting.
    NonMonotonic,
    /// A measurement uncertainty that is zero or negative.
    NonPositiveUncertainty,
    /// Grid bounds with `min >= max` or non-finite endpoints.
    BadRange,
    /// Fewer than two grid points requested.
    CountTooSmall,
    /// Grid values that are not uniformly spaced.
    NonUniformGrid,
    /// A negative entry in a weight vector.
    NegativeWeight,
    /// A weight vector whose sum is not positive.
    AllZeroWeights,
    /// A trial frequency that is zero, negative, or non-finite.
    NonPositiveFrequency,
    /// An explicit or derived kernel bandwidth that is not positive.
    NonPositiveBandwidth,
    /// A signal-to-noise ratio that is not positive, or a signal with
    /// zero RMS for which no noise level can be derived.
    NonPositiveSnr,
    /// Frequency-hop switch times that are not strictly increasing
    /// inside the signal duration.
    BadSwitchTimes,
    /// Samples that are not uniformly spaced where a uniform sampling
    /// rate is required.
    NonUniformInput,
    /// An unrecognised power normalization mode.
    UnknownMode,
    /// A hyperparameter outside its allowed range; carries the field name.
    InvalidConfig(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "input must contain at least one element"),
            Error::LengthMismatch { expected, actual } => {
                write!(f, "length mismatch: expected {expected}, got {actual}")
            }
            Error::NonFinite => write!(f, "inputs must be finite"),
            Error::NonMonotonic => write!(f, "epochs must be strictly increasing (no duplicates)"),
            Error::NonPositiveUncertainty => write!(f, "uncertainties must be positive"),
            Error::BadRange => write!(f, "range bounds must be finite with min < max"),
            Error::CountTooSmall => write!(f, "grids need at least two points"),
            Error::NonUniformGrid => write!(f, "grid values must be uniformly spaced"),
            Error::NegativeWeight => write!(f, "weights must be non-negative"),
            Error::AllZeroWeights => write!(f, "weights must not sum to zero"),
            Error::NonPositiveFrequency => write!(f, "trial frequency must be positive"),
            Error::NonPositiveBandwidth => write!(f, "kernel bandwidth must be positive"),
            Error::NonPositiveSnr => {
                write!(
                    f,
                    "signal-to-noise ratio must be positive for a non-zero signal"
                )
            }
            Error::BadSwitchTimes => {
                write!(
                    f,
                    "switch times must be strictly increasing inside (0, duration)"
                )
            }
            Error::NonUniformInput => write!(f, "samples must be uniformly spaced"),
            Error::UnknownMode => write!(f, "unknown normalization mode"),
            Error::InvalidConfig(field) => write!(f, "invalid configuration: {field}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
