//! Floating-point cyclic correlation through n-dimensional DFTs.
//!
//! Transforms are exact-length (rustfft picks mixed-radix or Bluestein per
//! axis), so the correlation stays cyclic. With `F` the unnormalized DFT,
//! `theta_{A,B} = conj(F^-1(conj(F A) * F B)) / V`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use perfect_arrays_core::{CorrelationTable, CorrelationValues, Error as CoreError, ExponentArray};
use rustfft::{FftDirection, FftPlanner};

use crate::{parallel, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Backend {
    #[default]
    Exact,
    Fft,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Fft => "fft",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Backend::Exact),
            "fft" => Ok(Backend::Fft),
            _ => Err(format!("unknown backend {s:?} (expected exact or fft)")),
        }
    }
}

pub fn cross_correlation(
    a: &ExponentArray,
    b: &ExponentArray,
    backend: Backend,
) -> Result<CorrelationTable> {
    match backend {
        Backend::Exact => parallel::cross_correlation(a, b),
        Backend::Fft => fft_cross_correlation(a, b),
    }
}

pub fn autocorrelation(a: &ExponentArray, backend: Backend) -> CorrelationTable {
    cross_correlation(a, a, backend).expect("an array is compatible with itself")
}

/// Entries `exp(2 pi i e / r)` in row-major order.
pub fn to_unit_complex(a: &ExponentArray) -> Vec<Complex64> {
    let r = a.modulus();
    let roots: Vec<Complex64> = (0..r)
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * f64::from(k) / f64::from(r)))
        .collect();
    a.exponents().iter().map(|&e| roots[e as usize]).collect()
}

/// In-place unnormalized n-dimensional DFT over a row-major buffer.
pub fn dft_nd(
    data: &mut [Complex64],
    shape: &[usize],
    direction: FftDirection,
    planner: &mut FftPlanner<f64>,
) {
    let volume: usize = shape.iter().product();
    assert_eq!(data.len(), volume);
    let mut stride = volume;
    for &len in shape {
        stride /= len;
        if len == 1 {
            continue;
        }
        let fft = planner.plan_fft(len, direction);
        if stride == 1 {
            fft.process(data);
            continue;
        }
        let mut line = vec![Complex64::default(); len];
        let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
        // Lines along this axis: `outer` blocks of `len * stride`, `stride` lines each.
        for block in data.chunks_mut(len * stride) {
            for offset in 0..stride {
                for (k, x) in line.iter_mut().enumerate() {
                    *x = block[k * stride + offset];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for (k, x) in line.iter().enumerate() {
                    block[k * stride + offset] = *x;
                }
            }
        }
    }
}

pub fn fft_cross_correlation(a: &ExponentArray, b: &ExponentArray) -> Result<CorrelationTable> {
    if a.shape() != b.shape() {
        return Err(CoreError::ShapeMismatch {
            left: a.shape().to_vec(),
            right: b.shape().to_vec(),
        }
        .into());
    }
    if a.modulus() != b.modulus() {
        return Err(CoreError::ModulusMismatch {
            left: a.modulus(),
            right: b.modulus(),
        }
        .into());
    }
    let shape = a.shape();
    let mut planner = FftPlanner::new();
    let mut fa = to_unit_complex(a);
    dft_nd(&mut fa, shape, FftDirection::Forward, &mut planner);
    let mut prod = if std::ptr::eq(a, b) {
        fa.iter()
            .map(|z| z.norm_sqr().into())
            .collect::<Vec<Complex64>>()
    } else {
        let mut fb = to_unit_complex(b);
        dft_nd(&mut fb, shape, FftDirection::Forward, &mut planner);
        fa.iter().zip(&fb).map(|(x, y)| x.conj() * y).collect()
    };
    dft_nd(&mut prod, shape, FftDirection::Inverse, &mut planner);
    let scale = 1.0 / a.volume() as f64;
    let values = prod.iter().map(|z| z.conj() * scale).collect();
    Ok(CorrelationTable::new(
        shape.to_vec(),
        CorrelationValues::Complex(values),
    ))
}

/// Relative gap between the two sides of Parseval's identity for the FFT
/// autocorrelation: `sum_s |theta(s)|^2 = (1/V) sum_k |F A (k)|^4`.
pub fn parseval_residual(a: &ExponentArray) -> f64 {
    let mut planner = FftPlanner::new();
    let mut fa = to_unit_complex(a);
    dft_nd(&mut fa, a.shape(), FftDirection::Forward, &mut planner);
    let spectral: f64 = fa.iter().map(|z| z.norm_sqr().powi(2)).sum::<f64>() / a.volume() as f64;
    let theta = fft_cross_correlation(a, a)
        .expect("self-compatible")
        .to_complex();
    let direct: f64 = theta.iter().map(|z| z.norm_sqr()).sum();
    (direct - spectral).abs() / spectral.max(f64::MIN_POSITIVE)
}

/// Largest entrywise `|x - y|` between two tables of the same shape.
pub fn max_deviation(x: &CorrelationTable, y: &CorrelationTable) -> f64 {
    assert_eq!(x.shape(), y.shape());
    x.to_complex()
        .iter()
        .zip(y.to_complex())
        .map(|(p, q)| (p - q).norm())
        .fold(0.0, f64::max)
}
