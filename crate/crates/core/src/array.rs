//! Arrays over roots of unity in index notation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// An n-dimensional array whose entries are r-th roots of unity, stored as
/// exponents in `0..modulus`, row-major with the last index varying fastest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentArray {
    modulus: u32,
    shape: Vec<usize>,
    exponents: Vec<u32>,
}

impl ExponentArray {
    /// Builds an array from arbitrary integer exponents, reducing each one
    /// into `0..modulus`.
    pub fn new(modulus: u32, shape: Vec<usize>, exponents: &[i64]) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let volume = checked_volume(&shape)?;
        if exponents.len() != volume {
            return Err(Error::LengthMismatch {
                expected: volume,
                actual: exponents.len(),
            });
        }
        let r = i64::from(modulus);
        let exponents = exponents.iter().map(|&e| e.rem_euclid(r) as u32).collect();
        Ok(Self {
            modulus,
            shape,
            exponents,
        })
    }

    /// Builds an array by evaluating `f` at every index in row-major order.
    /// The returned value is reduced modulo `modulus`.
    pub fn from_fn<F>(modulus: u32, shape: Vec<usize>, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> u64,
    {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let volume = checked_volume(&shape)?;
        let r = u64::from(modulus);
        let mut exponents = Vec::with_capacity(volume);
        let mut odo = Odometer::new(&shape);
        loop {
            exponents.push((f(odo.index()) % r) as u32);
            if !odo.advance() {
                break;
            }
        }
        Ok(Self {
            modulus,
            shape,
            exponents,
        })
    }

    /// Callers guarantee the shape is valid and every exponent is reduced.
    pub(crate) fn from_parts(modulus: u32, shape: Vec<usize>, exponents: Vec<u32>) -> Self {
        debug_assert!(exponents.len() == shape.iter().product::<usize>());
        debug_assert!(exponents.iter().all(|&e| e < modulus));
        Self {
            modulus,
            shape,
            exponents,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn ndim(&self) -> usize {
        self.shape.len()
    }

    pub fn volume(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_sequence(&self) -> bool {
        self.shape.len() == 1
    }

    /// Exponent at an arbitrary integer index; every coordinate is reduced
    /// cyclically modulo its extent.
    pub fn entry(&self, idx: &[i64]) -> Result<u32> {
        if idx.len() != self.shape.len() {
            return Err(Error::DimensionMismatch {
                expected: self.shape.len(),
                actual: idx.len(),
            });
        }
        let flat = idx.iter().zip(&self.shape).fold(0usize, |acc, (&i, &l)| {
            acc * l + i.rem_euclid(l as i64) as usize
        });
        Ok(self.exponents[flat])
    }

    /// Exponent at an in-range index.
    ///
    /// # Panics
    ///
    /// If `idx` has the wrong length or a coordinate is out of range.
    pub fn get(&self, idx: &[usize]) -> u32 {
        assert_eq!(idx.len(), self.shape.len(), "index dimension mismatch");
        let flat = idx.iter().zip(&self.shape).fold(0usize, |acc, (&i, &l)| {
            assert!(i < l, "index {i} out of range for extent {l}");
            acc * l + i
        });
        self.exponents[flat]
    }

    /// The same entries read row by row as a one-dimensional sequence.
    pub fn flatten_row_major(&self) -> ExponentArray {
        ExponentArray {
            modulus: self.modulus,
            shape: vec![self.volume()],
            exponents: self.exponents.clone(),
        }
    }

    /// Reinterprets the row-major entries under a new shape of equal volume.
    pub fn reshape(&self, shape: Vec<usize>) -> Result<ExponentArray> {
        let volume = checked_volume(&shape)?;
        if volume != self.volume() {
            return Err(Error::LengthMismatch {
                expected: volume,
                actual: self.volume(),
            });
        }
        Ok(ExponentArray {
            modulus: self.modulus,
            shape,
            exponents: self.exponents.clone(),
        })
    }
}

impl fmt::Debug for ExponentArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExponentArray")
            .field("modulus", &self.modulus)
            .field("shape", &self.shape)
            .field("exponents", &self.exponents)
            .finish()
    }
}

/// A cyclic shift, one integer per dimension. Components may be negative or
/// exceed the extent; they are read modulo the matching extent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftVector(pub Vec<i64>);

impl ShiftVector {
    pub fn zero(ndim: usize) -> Self {
        ShiftVector(vec![0; ndim])
    }

    pub fn ndim(&self) -> usize {
        self.0.len()
    }

    /// Components reduced into `0..l_i`.
    pub fn reduce(&self, shape: &[usize]) -> Result<Vec<usize>> {
        if self.0.len() != shape.len() {
            return Err(Error::DimensionMismatch {
                expected: shape.len(),
                actual: self.0.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(shape)
            .map(|(&s, &l)| s.rem_euclid(l as i64) as usize)
            .collect())
    }

    /// True if some component is nonzero modulo its extent.
    pub fn is_off_peak(&self, shape: &[usize]) -> bool {
        self.0
            .iter()
            .zip(shape)
            .any(|(&s, &l)| s.rem_euclid(l as i64) != 0)
    }

    pub fn negated(&self) -> Self {
        ShiftVector(self.0.iter().map(|s| -s).collect())
    }

    pub(crate) fn from_index(idx: &[usize]) -> Self {
        ShiftVector(idx.iter().map(|&i| i as i64).collect())
    }
}

impl From<Vec<i64>> for ShiftVector {
    fn from(v: Vec<i64>) -> Self {
        ShiftVector(v)
    }
}

/// Largest supported volume. Correlation coefficients count entries, so this
/// also bounds every coefficient of every correlation value.
pub const MAX_VOLUME: usize = 1 << 31;

/// Product of the extents, rejecting empty shapes, zero extents and volumes
/// above [`MAX_VOLUME`].
pub fn checked_volume(shape: &[usize]) -> Result<usize> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    if shape.contains(&0) {
        return Err(Error::ZeroExtent(shape.to_vec()));
    }
    let volume = shape
        .iter()
        .try_fold(1usize, |acc, &l| {
            acc.checked_mul(l).filter(|&v| v <= MAX_VOLUME)
        })
        .ok_or(Error::VolumeTooLarge(
            shape.iter().fold(1usize, |a, &l| a.saturating_mul(l)),
        ))?;
    Ok(volume)
}

/// Row-major coordinates of a flat offset.
pub fn unravel(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for axis in (0..shape.len()).rev() {
        idx[axis] = flat % shape[axis];
        flat /= shape[axis];
    }
    idx
}

/// Row-major strides for `shape`.
pub fn strides(shape: &[usize]) -> Vec<usize> {
    let mut out = vec![1usize; shape.len()];
    for axis in (0..shape.len().saturating_sub(1)).rev() {
        out[axis] = out[axis + 1] * shape[axis + 1];
    }
    out
}

/// Row-major counter over every index of a shape.
#[derive(Debug, Clone)]
pub struct Odometer<'a> {
    shape: &'a [usize],
    idx: Vec<usize>,
}

impl<'a> Odometer<'a> {
    pub fn new(shape: &'a [usize]) -> Self {
        Odometer {
            shape,
            idx: vec![0; shape.len()],
        }
    }

    pub fn index(&self) -> &[usize] {
        &self.idx
    }

    /// Steps to the next index; returns false after wrapping past the last.
    pub fn advance(&mut self) -> bool {
        for axis in (0..self.shape.len()).rev() {
            self.idx[axis] += 1;
            if self.idx[axis] < self.shape[axis] {
                return true;
            }
            self.idx[axis] = 0;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frank16() -> ExponentArray {
        ExponentArray::new(
            4,
            vec![16],
            &[0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 1],
        )
        .unwrap()
    }

    #[test]
    fn make_array_examples() {
        let a = ExponentArray::new(2, vec![4], &[0, 0, 0, 1]).unwrap();
        assert_eq!(a.exponents(), &[0, 0, 0, 1]);
        let one = ExponentArray::new(4, vec![1], &[0]).unwrap();
        assert_eq!(one.volume(), 1);
        let b = ExponentArray::new(3, vec![2, 2], &[0, 1, 2, 4]).unwrap();
        assert_eq!(b.exponents(), &[0, 1, 2, 1]);
        let neg = ExponentArray::new(5, vec![2], &[-1, -6]).unwrap();
        assert_eq!(neg.exponents(), &[4, 4]);
    }

    #[test]
    fn make_array_errors() {
        assert_eq!(
            ExponentArray::new(0, vec![1], &[0]),
            Err(Error::ZeroModulus)
        );
        assert_eq!(
            ExponentArray::new(2, vec![2, 2], &[0, 1, 0]),
            Err(Error::LengthMismatch {
                expected: 4,
                actual: 3
            })
        );
        assert_eq!(ExponentArray::new(2, vec![], &[]), Err(Error::EmptyShape));
        assert!(matches!(
            ExponentArray::new(2, vec![2, 0], &[]),
            Err(Error::ZeroExtent(_))
        ));
        assert_eq!(
            checked_volume(&[1 << 16, 1 << 16]),
            Err(Error::VolumeTooLarge(1 << 32))
        );
        assert_eq!(checked_volume(&[1 << 16, 1 << 15]), Ok(1 << 31));
    }

    #[test]
    fn entry_reduces_cyclically() {
        let s = frank16();
        assert_eq!(s.entry(&[5]).unwrap(), 1);
        assert_eq!(s.entry(&[21]).unwrap(), 1);
        assert_eq!(s.entry(&[-11]).unwrap(), 1);
        assert_eq!(s.entry(&[0]).unwrap(), s.exponents()[0]);
        assert_eq!(
            s.entry(&[0, 0]),
            Err(Error::DimensionMismatch {
                expected: 1,
                actual: 2
            })
        );
        let m = ExponentArray::new(4, vec![2, 2], &[0, 1, 2, 3]).unwrap();
        assert_eq!(m.entry(&[-1, 3]).unwrap(), 3);
        assert_eq!(m.get(&[1, 0]), 2);
    }

    #[test]
    fn flatten_examples() {
        let frank_array = frank16().reshape(vec![4, 4]).unwrap();
        assert_eq!(
            frank_array.flatten_row_major().exponents(),
            &[0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 1]
        );
        let s = frank16();
        assert_eq!(s.flatten_row_major(), s);
        let m = ExponentArray::new(4, vec![2, 2], &[0, 1, 2, 3]).unwrap();
        let flat = m.flatten_row_major();
        assert_eq!(flat.shape(), &[4]);
        assert_eq!(flat.exponents(), &[0, 1, 2, 3]);
    }

    #[test]
    fn odometer_is_row_major() {
        let shape = [2, 3];
        let mut odo = Odometer::new(&shape);
        let mut seen = Vec::new();
        loop {
            seen.push((odo.index()[0], odo.index()[1]));
            if !odo.advance() {
                break;
            }
        }
        assert_eq!(seen, [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]);
        assert_eq!(strides(&[2, 3, 4]), [12, 4, 1]);
        assert_eq!(unravel(17, &[2, 3, 4]), [1, 1, 1]);
    }

    #[test]
    fn shift_vector_reduction() {
        let s = ShiftVector(vec![-1, 7]);
        assert_eq!(s.reduce(&[4, 3]).unwrap(), [3, 1]);
        assert!(s.is_off_peak(&[4, 3]));
        assert!(!ShiftVector(vec![4, -3]).is_off_peak(&[4, 3]));
    }
}
