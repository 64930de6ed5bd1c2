use std::path::PathBuf;

/// Errors from file ingestion, serialization, and the CLI layer.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not a recognised spectrogram file (expected `{expected}` on line 1)")]
    FormatVersionMismatch { expected: &'static str },

    #[error(transparent)]
    Data(#[from] nust_core::Error),

    #[error("{path}: {source}")]
    WithPath {
        path: PathBuf,
        #[source]
        source: Box<CliError>,
    },
}

impl CliError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    /// Attaches the offending file path to an error.
    pub fn with_path(self, path: impl Into<PathBuf>) -> Self {
        CliError::WithPath {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
