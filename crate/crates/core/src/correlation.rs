//! Periodic cross- and autocorrelation over the full cyclic shift lattice.
//!
//! For arrays `A`, `B` of equal shape the correlation at shift `s` is
//! `sum_i A[i] * conj(B[i + s])`, indices taken componentwise modulo the
//! extents. In index notation each term is `w^(a[i] - b[i + s])`, so the exact
//! value at one shift is a histogram of exponent differences.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::array::{unravel, Odometer};
use crate::{CyclotomicValue, Error, ExponentArray, Result, ShiftVector, ZeroTest};

/// One value per shift, in row-major shift order.
#[derive(Debug, Clone, PartialEq)]
pub enum CorrelationValues {
    Exact(Vec<CyclotomicValue>),
    Complex(Vec<Complex64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationTable {
    shape: Vec<usize>,
    values: CorrelationValues,
}

impl CorrelationTable {
    /// # Panics
    ///
    /// If the number of values differs from the shape's volume.
    pub fn new(shape: Vec<usize>, values: CorrelationValues) -> Self {
        let len = match &values {
            CorrelationValues::Exact(v) => v.len(),
            CorrelationValues::Complex(v) => v.len(),
        };
        assert_eq!(len, shape.iter().product::<usize>(), "one value per shift");
        CorrelationTable { shape, values }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn values(&self) -> &CorrelationValues {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn backend(&self) -> &'static str {
        match self.values {
            CorrelationValues::Exact(_) => "exact",
            CorrelationValues::Complex(_) => "fft",
        }
    }

    pub fn exact(&self) -> Option<&[CyclotomicValue]> {
        match &self.values {
            CorrelationValues::Exact(v) => Some(v),
            CorrelationValues::Complex(_) => None,
        }
    }

    /// Value at an arbitrary shift, as a complex number.
    pub fn value_at(&self, shift: &ShiftVector) -> Result<Complex64> {
        let idx = shift.reduce(&self.shape)?;
        let flat = idx
            .iter()
            .zip(&self.shape)
            .fold(0, |acc, (&i, &l)| acc * l + i);
        Ok(match &self.values {
            CorrelationValues::Exact(v) => v[flat].to_complex(),
            CorrelationValues::Complex(v) => v[flat],
        })
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        match &self.values {
            CorrelationValues::Exact(v) => v.iter().map(CyclotomicValue::to_complex).collect(),
            CorrelationValues::Complex(v) => v.clone(),
        }
    }

    /// Shifts whose exact value is nonzero, in row-major order. `None` for
    /// floating-point tables.
    pub fn nonzero_shifts(&self) -> Option<Vec<ShiftVector>> {
        let values = self.exact()?;
        let test = values.first().map(|v| ZeroTest::new(v.modulus()))?;
        Some(
            values
                .iter()
                .enumerate()
                .filter(|(_, v)| !test.is_zero(v))
                .map(|(flat, _)| ShiftVector::from_index(&unravel(flat, &self.shape)))
                .collect(),
        )
    }
}

/// Outcome of a perfection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Perfection {
    Perfect,
    /// The first off-peak shift, in row-major order, with nonzero
    /// autocorrelation.
    Imperfect {
        witness: ShiftVector,
    },
}

impl Perfection {
    pub fn is_perfect(&self) -> bool {
        matches!(self, Perfection::Perfect)
    }

    pub fn witness(&self) -> Option<&ShiftVector> {
        match self {
            Perfection::Perfect => None,
            Perfection::Imperfect { witness } => Some(witness),
        }
    }
}

pub(crate) fn check_compatible(a: &ExponentArray, b: &ExponentArray) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            left: a.shape().to_vec(),
            right: b.shape().to_vec(),
        });
    }
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.modulus(),
            right: b.modulus(),
        });
    }
    Ok(())
}

/// Exact cross-correlation for every shift.
pub fn cross_correlation(a: &ExponentArray, b: &ExponentArray) -> Result<CorrelationTable> {
    check_compatible(a, b)?;
    let shape = a.shape();
    let mut values = Vec::with_capacity(a.volume());
    let mut odo = Odometer::new(shape);
    loop {
        let mut v = CyclotomicValue::zero(a.modulus());
        correlation_at(a, b, odo.index(), &mut v);
        values.push(v);
        if !odo.advance() {
            break;
        }
    }
    Ok(CorrelationTable::new(
        shape.to_vec(),
        CorrelationValues::Exact(values),
    ))
}

/// Exact autocorrelation for every shift.
pub fn autocorrelation(a: &ExponentArray) -> CorrelationTable {
    cross_correlation(a, a).expect("an array is compatible with itself")
}

/// Adds the correlation of `a` and `b` at the reduced shift `shift` into
/// `out`. Shapes and moduli must already agree.
pub fn correlation_at(
    a: &ExponentArray,
    b: &ExponentArray,
    shift: &[usize],
    out: &mut CyclotomicValue,
) {
    debug_assert_eq!(a.shape(), b.shape());
    debug_assert_eq!(shift.len(), a.ndim());
    let r = a.modulus();
    let mut counts = alloc::vec![0u64; r as usize];
    accumulate_shifted(
        a.exponents(),
        b.exponents(),
        a.shape(),
        shift,
        0,
        0,
        0,
        r,
        &mut counts,
    );
    for (k, c) in counts.into_iter().enumerate() {
        if c != 0 {
            out.add_at(k, c as i64);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn accumulate_shifted(
    a: &[u32],
    b: &[u32],
    shape: &[usize],
    shift: &[usize],
    axis: usize,
    a_off: usize,
    b_off: usize,
    r: u32,
    counts: &mut [u64],
) {
    let len = shape[axis];
    let s = shift[axis];
    if axis + 1 == shape.len() {
        let a_row = &a[a_off..a_off + len];
        let b_row = &b[b_off..b_off + len];
        let (head, tail) = a_row.split_at(len - s);
        for (&x, &y) in head
            .iter()
            .zip(&b_row[s..])
            .chain(tail.iter().zip(&b_row[..s]))
        {
            let d = x + r - y;
            counts[(if d >= r { d - r } else { d }) as usize] += 1;
        }
        return;
    }
    let stride: usize = shape[axis + 1..].iter().product();
    for i in 0..len {
        let j = if i + s >= len { i + s - len } else { i + s };
        accumulate_shifted(
            a,
            b,
            shape,
            shift,
            axis + 1,
            a_off + i * stride,
            b_off + j * stride,
            r,
            counts,
        );
    }
}

/// Exact correlation at a single, possibly unreduced, shift.
pub fn correlation_value(
    a: &ExponentArray,
    b: &ExponentArray,
    shift: &ShiftVector,
) -> Result<CyclotomicValue> {
    check_compatible(a, b)?;
    let reduced = shift.reduce(a.shape())?;
    let mut v = CyclotomicValue::zero(a.modulus());
    correlation_at(a, b, &reduced, &mut v);
    Ok(v)
}

/// True iff the cross-correlation vanishes at every shift.
pub fn orthogonal(a: &ExponentArray, b: &ExponentArray) -> Result<bool> {
    check_compatible(a, b)?;
    let test = ZeroTest::new(a.modulus());
    Ok(first_nonzero_shift(a, b, &test, false).is_none())
}

/// Exact perfection check: every off-peak autocorrelation must vanish.
pub fn is_perfect(a: &ExponentArray) -> Perfection {
    is_perfect_with(a, &ZeroTest::new(a.modulus()))
}

/// As [`is_perfect`] with caller-supplied cyclotomic tables.
pub fn is_perfect_with(a: &ExponentArray, test: &ZeroTest) -> Perfection {
    match first_nonzero_shift(a, a, test, true) {
        None => Perfection::Perfect,
        Some(witness) => Perfection::Imperfect { witness },
    }
}

fn first_nonzero_shift(
    a: &ExponentArray,
    b: &ExponentArray,
    test: &ZeroTest,
    skip_peak: bool,
) -> Option<ShiftVector> {
    let shape = a.shape();
    let mut odo = Odometer::new(shape);
    if skip_peak && !odo.advance() {
        return None;
    }
    loop {
        let mut v = CyclotomicValue::zero(a.modulus());
        correlation_at(a, b, odo.index(), &mut v);
        if !test.is_zero(&v) {
            return Some(ShiftVector::from_index(odo.index()));
        }
        if !odo.advance() {
            return None;
        }
    }
}
