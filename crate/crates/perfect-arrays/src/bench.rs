//! Timing comparison of the exact and FFT correlation backends on seeded
//! random arrays.

use std::time::Instant;

use perfect_arrays_core::array::checked_volume;
use perfect_arrays_core::{correlation, ExponentArray};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{fft, Error, Result};

/// Largest volume benchmarked by default; the exact path is quadratic in it.
pub const DEFAULT_MAX_VOLUME: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    pub max_volume: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            max_volume: DEFAULT_MAX_VOLUME,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub shape: Vec<usize>,
    pub modulus: u32,
    pub volume: usize,
    pub repetitions: usize,
    pub seed: u64,
    /// Mean wall time per autocorrelation.
    pub exact_seconds: f64,
    pub fft_seconds: f64,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub parseval_residual: f64,
}

pub fn random_array(shape: &[usize], modulus: u32, rng: &mut impl Rng) -> Result<ExponentArray> {
    let volume = checked_volume(shape)?;
    let exponents: Vec<i64> = (0..volume)
        .map(|_| i64::from(rng.random_range(0..modulus.max(1))))
        .collect();
    Ok(ExponentArray::new(modulus, shape.to_vec(), &exponents)?)
}

/// Times `repetitions` autocorrelations of one random array per backend.
/// Fails if the backends disagree by more than `1e-6 * volume` anywhere.
pub fn bench_correlation(
    shape: &[usize],
    modulus: u32,
    repetitions: usize,
    config: &BenchConfig,
) -> Result<BenchReport> {
    let volume = checked_volume(shape)?;
    if volume > config.max_volume {
        return Err(Error::VolumeCap {
            volume,
            cap: config.max_volume,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let a = random_array(shape, modulus, &mut rng)?;
    let reps = repetitions.max(1);

    let start = Instant::now();
    let mut exact = correlation::autocorrelation(&a);
    for _ in 1..reps {
        exact = correlation::autocorrelation(&a);
    }
    let exact_seconds = start.elapsed().as_secs_f64() / reps as f64;

    let start = Instant::now();
    let mut approx = fft::fft_cross_correlation(&a, &a)?;
    for _ in 1..reps {
        approx = fft::fft_cross_correlation(&a, &a)?;
    }
    let fft_seconds = start.elapsed().as_secs_f64() / reps as f64;

    let max_deviation = fft::max_deviation(&exact, &approx);
    let tolerance = 1e-6 * volume as f64;
    if max_deviation > tolerance {
        return Err(Error::BackendDisagreement {
            deviation: max_deviation,
            tolerance,
        });
    }
    Ok(BenchReport {
        shape: shape.to_vec(),
        modulus,
        volume,
        repetitions: reps,
        seed: config.seed,
        exact_seconds,
        fft_seconds,
        max_deviation,
        tolerance,
        parseval_residual: fft::parseval_residual(&a),
    })
}
