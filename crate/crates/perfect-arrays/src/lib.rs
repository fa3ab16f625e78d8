//! File formats, the FFT correlation backend, renders, benchmarks and
//! parameter sweeps on top of [`perfect_arrays_core`].
//!
//! The exact backend in the core crate decides every property; the FFT path
//! here is for timing comparisons and large arrays where an approximate
//! table is enough.

pub mod bench;
pub mod cache;
pub mod fft;
pub mod formats;
pub mod io;
pub mod parallel;
pub mod render;
pub mod sweep;

mod error;

pub use error::Error;
pub use fft::Backend;

pub type Result<T, E = Error> = std::result::Result<T, E>;
