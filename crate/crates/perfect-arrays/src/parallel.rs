//! Parallel versions of the exact correlation routines. Results are
//! identical to the sequential ones in the core crate for any thread count.

use std::sync::OnceLock;

use perfect_arrays_core::array::unravel;
use perfect_arrays_core::correlation::correlation_at;
use perfect_arrays_core::{
    CorrelationTable, CorrelationValues, CyclotomicValue, Error as CoreError, ExponentArray,
    Perfection, ShiftVector,
};
use rayon::prelude::*;

use crate::{cache, Error, Result};

pub const THREADS_VAR: &str = "PERFECT_ARRAYS_THREADS";

/// Thread cap from `PERFECT_ARRAYS_THREADS`, if set.
pub fn configured_threads() -> Result<Option<usize>> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Threads(s)),
        },
    }
}

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Ok(Some(n)) = configured_threads() {
            builder = builder.num_threads(n);
        }
        builder.build().expect("thread pool")
    })
}

pub fn cross_correlation(a: &ExponentArray, b: &ExponentArray) -> Result<CorrelationTable> {
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
    let values = pool().install(|| {
        (0..a.volume())
            .into_par_iter()
            .map(|flat| {
                let mut v = CyclotomicValue::zero(a.modulus());
                correlation_at(a, b, &unravel(flat, shape), &mut v);
                v
            })
            .collect()
    });
    Ok(CorrelationTable::new(
        shape.to_vec(),
        CorrelationValues::Exact(values),
    ))
}

pub fn autocorrelation(a: &ExponentArray) -> CorrelationTable {
    cross_correlation(a, a).expect("an array is compatible with itself")
}

/// Perfection with the first failing shift in row-major order, as in
/// [`perfect_arrays_core::correlation::is_perfect`].
pub fn is_perfect(a: &ExponentArray) -> Perfection {
    let test = cache::zero_test(a.modulus());
    let shape = a.shape();
    let witness = pool().install(|| {
        (1..a.volume()).into_par_iter().find_first(|&flat| {
            let mut v = CyclotomicValue::zero(a.modulus());
            correlation_at(a, a, &unravel(flat, shape), &mut v);
            !test.is_zero(&v)
        })
    });
    match witness {
        None => Perfection::Perfect,
        Some(flat) => Perfection::Imperfect {
            witness: ShiftVector(unravel(flat, shape).into_iter().map(|i| i as i64).collect()),
        },
    }
}
