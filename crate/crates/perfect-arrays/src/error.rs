use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] perfect_arrays_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("volume {volume} exceeds the configured cap {cap}")]
    VolumeCap { volume: usize, cap: usize },
    #[error("render needs a two-dimensional array, got shape {0:?}")]
    NotTwoDimensional(Vec<usize>),
    #[error("the hue palette needs the PPM format")]
    PaletteFormat,
    #[error("scale must be at least 1")]
    ZeroScale,
    #[error("backends disagree: max deviation {deviation:e} exceeds {tolerance:e}")]
    BackendDisagreement { deviation: f64, tolerance: f64 },
    #[error("PERFECT_ARRAYS_THREADS must be a positive integer, got {0:?}")]
    Threads(String),
    #[error("unknown sweep preset {0:?}")]
    UnknownPreset(String),
}
