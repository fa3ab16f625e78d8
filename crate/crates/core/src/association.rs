//! Block reshape between an n-dimensional array and its 2n-dimensional
//! associated array.
//!
//! For a divisor `d` of every extent, the associated array `A'` has shape
//! `(m_0/d, ..., m_{n-1}/d, d, ..., d)` and
//! `A'[q_0, ..., q_{n-1}, r_0, ..., r_{n-1}] = A[q_0*d + r_0, ..., q_{n-1}*d + r_{n-1}]`.
//! The first `n` coordinates pick a block, the last `n` a position inside it.
//! Fixing the within-block coordinates gives one of the `d^n` sub-arrays
//! `A'[r_0, ..., r_{n-1}]`.

use alloc::vec::Vec;

use crate::array::Odometer;
use crate::{Error, ExponentArray, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedArray {
    base: ExponentArray,
    divisors: Vec<usize>,
}

impl AssociatedArray {
    /// Wraps a 2n-dimensional array whose last `n` extents are the
    /// within-block divisors.
    pub fn from_base(base: ExponentArray) -> Result<Self> {
        let ndim = base.ndim();
        if ndim % 2 != 0 {
            return Err(Error::InvalidParameter {
                name: "dimension",
                value: ndim as i64,
                requirement: "an associated array has an even number of dimensions",
            });
        }
        let divisors = base.shape()[ndim / 2..].to_vec();
        Ok(AssociatedArray { base, divisors })
    }

    pub fn base(&self) -> &ExponentArray {
        &self.base
    }

    pub fn into_base(self) -> ExponentArray {
        self.base
    }

    /// Dimension `n` of the concatenated array.
    pub fn split(&self) -> usize {
        self.divisors.len()
    }

    pub fn divisors(&self) -> &[usize] {
        &self.divisors
    }

    /// The divisor when it is the same on every axis.
    pub fn divisor(&self) -> Option<usize> {
        let first = *self.divisors.first()?;
        self.divisors.iter().all(|&d| d == first).then_some(first)
    }

    /// Extents of each sub-array (the block-coordinate extents).
    pub fn block_shape(&self) -> &[usize] {
        &self.base.shape()[..self.split()]
    }

    /// The n-dimensional array obtained by fixing the within-block
    /// coordinates.
    pub fn subarray(&self, within: &[usize]) -> Result<ExponentArray> {
        let n = self.split();
        if within.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: within.len(),
            });
        }
        for (axis, (&w, &d)) in within.iter().zip(&self.divisors).enumerate() {
            if w >= d {
                return Err(Error::OutOfRange {
                    axis,
                    value: w,
                    bound: d,
                });
            }
        }
        let block_shape = self.block_shape().to_vec();
        let within_volume: usize = self.divisors.iter().product();
        let within_flat = within
            .iter()
            .zip(&self.divisors)
            .fold(0, |acc, (&w, &d)| acc * d + w);
        let src = self.base.exponents();
        let exponents = (0..src.len() / within_volume)
            .map(|q| src[q * within_volume + within_flat])
            .collect();
        Ok(ExponentArray::from_parts(
            self.base.modulus(),
            block_shape,
            exponents,
        ))
    }

    /// Every sub-array with its within-block vector, in row-major order of
    /// the within-block vectors.
    pub fn subarrays(&self) -> Vec<(Vec<usize>, ExponentArray)> {
        let mut out = Vec::new();
        let mut odo = Odometer::new(&self.divisors);
        loop {
            let within = odo.index().to_vec();
            let sub = self
                .subarray(&within)
                .expect("within-block vector in range");
            out.push((within, sub));
            if !odo.advance() {
                break;
            }
        }
        out
    }

    /// The n-dimensional array this associated array came from.
    pub fn concatenate(&self) -> ExponentArray {
        let n = self.split();
        let block_shape = self.block_shape();
        let shape: Vec<usize> = block_shape
            .iter()
            .zip(&self.divisors)
            .map(|(&b, &d)| b * d)
            .collect();
        let base_shape = self.base.shape();
        let mut base_idx = alloc::vec![0usize; 2 * n];
        let mut exponents = Vec::with_capacity(self.base.volume());
        let mut odo = Odometer::new(&shape);
        loop {
            for (axis, &i) in odo.index().iter().enumerate() {
                base_idx[axis] = i / self.divisors[axis];
                base_idx[axis + n] = i % self.divisors[axis];
            }
            let flat = base_idx
                .iter()
                .zip(base_shape)
                .fold(0, |acc, (&i, &l)| acc * l + i);
            exponents.push(self.base.exponents()[flat]);
            if !odo.advance() {
                break;
            }
        }
        ExponentArray::from_parts(self.base.modulus(), shape, exponents)
    }
}

/// Associates `a` for a divisor `d` that divides every extent.
pub fn associate(a: &ExponentArray, d: usize) -> Result<AssociatedArray> {
    let divisors = alloc::vec![d; a.ndim()];
    associate_per_axis(a, &divisors)
}

/// Associates `a` with an individual divisor per axis.
pub fn associate_per_axis(a: &ExponentArray, divisors: &[usize]) -> Result<AssociatedArray> {
    let n = a.ndim();
    if divisors.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: divisors.len(),
        });
    }
    for (axis, (&extent, &d)) in a.shape().iter().zip(divisors).enumerate() {
        if d == 0 || extent % d != 0 {
            return Err(Error::NotDivisible {
                axis,
                extent,
                divisor: d,
            });
        }
    }
    let mut shape: Vec<usize> = a
        .shape()
        .iter()
        .zip(divisors)
        .map(|(&m, &d)| m / d)
        .collect();
    shape.extend_from_slice(divisors);
    let mut exponents = Vec::with_capacity(a.volume());
    let mut odo = Odometer::new(&shape);
    let src_shape = a.shape();
    loop {
        let idx = odo.index();
        let flat = (0..n).fold(0usize, |acc, axis| {
            acc * src_shape[axis] + idx[axis] * divisors[axis] + idx[axis + n]
        });
        exponents.push(a.exponents()[flat]);
        if !odo.advance() {
            break;
        }
    }
    Ok(AssociatedArray {
        base: ExponentArray::from_parts(a.modulus(), shape, exponents),
        divisors: divisors.to_vec(),
    })
}

/// Inverse of [`associate`].
pub fn concatenate(associated: &AssociatedArray) -> ExponentArray {
    associated.concatenate()
}
