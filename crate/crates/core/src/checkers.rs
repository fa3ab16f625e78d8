//! Decision procedures for the array orthogonality property (AOP) of
//! sequences and its n-dimensional generalization (GAOP).
//!
//! Both properties are stated on the associated array `A'` for a divisor `d`:
//!
//! 1. every two distinct sub-arrays `A'[r]`, `A'[r']` are orthogonal (their
//!    cross-correlation vanishes at every shift);
//! 2. the sub-arrays form a periodic complementary set: the sum of their
//!    autocorrelations vanishes at every off-peak shift.
//!
//! Shifts range over the sub-array lattice (extent `m_i / d` on axis `i`).
//! All sums are evaluated exactly.

use alloc::vec::Vec;

use crate::array::Odometer;
use crate::association::associate_per_axis;
use crate::correlation::{
    correlation_at, is_perfect_with, CorrelationTable, CorrelationValues, Perfection,
};
use crate::{CyclotomicValue, Error, ExponentArray, Result, ShiftVector, ZeroTest};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropertyKind {
    Aop,
    Gaop,
    Perfect,
}

impl PropertyKind {
    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::Aop => "aop",
            PropertyKind::Gaop => "gaop",
            PropertyKind::Perfect => "perfect",
        }
    }
}

/// Cross-correlation summary for one unordered pair of distinct sub-arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// Shifts at which the cross-correlation is exactly zero.
    pub zero_shifts: usize,
    pub total_shifts: usize,
}

impl PairCheck {
    pub fn orthogonal(&self) -> bool {
        self.zero_shifts == self.total_shifts
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition1Failure {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub shift: ShiftVector,
}

/// Evidence for one property check.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub property: PropertyKind,
    pub divisors: Vec<usize>,
    pub holds: bool,
    pub pairs: Vec<PairCheck>,
    pub condition1_failures: Vec<Condition1Failure>,
    pub condition2_failures: Vec<ShiftVector>,
    /// Sum of the sub-array autocorrelations (condition 2).
    pub summary_table: Option<CorrelationTable>,
    /// First failing shift of a perfection check.
    pub witness: Option<ShiftVector>,
    pub notes: Vec<&'static str>,
}

pub const SHIFT_LATTICE_NOTE: &str =
    "condition 2 is evaluated on the full sub-array shift lattice; \
     a shift is off-peak when some coordinate is nonzero modulo its sub-array extent";

/// AOP of a sequence of length `l d^2` for the divisor `d`.
pub fn aop_check(s: &ExponentArray, d: usize) -> Result<PropertyReport> {
    if !s.is_sequence() {
        return Err(Error::NotSequence(s.shape().to_vec()));
    }
    let square = d.checked_mul(d).ok_or(Error::Overflow)?;
    if d == 0 || s.volume() % square != 0 {
        return Err(Error::NotAopLength {
            length: s.volume(),
            square,
        });
    }
    orthogonality_report(s, &[d], PropertyKind::Aop)
}

/// GAOP of an n-dimensional array for a divisor `d` of every extent.
pub fn gaop_check(a: &ExponentArray, d: usize) -> Result<PropertyReport> {
    let divisors = alloc::vec![d; a.ndim()];
    gaop_check_per_axis(a, &divisors)
}

/// GAOP with an individual divisor per axis.
pub fn gaop_check_per_axis(a: &ExponentArray, divisors: &[usize]) -> Result<PropertyReport> {
    orthogonality_report(a, divisors, PropertyKind::Gaop)
}

fn orthogonality_report(
    a: &ExponentArray,
    divisors: &[usize],
    property: PropertyKind,
) -> Result<PropertyReport> {
    let associated = associate_per_axis(a, divisors)?;
    let subs = associated.subarrays();
    let block_shape = associated.block_shape().to_vec();
    let test = ZeroTest::new(a.modulus());
    let total_shifts: usize = block_shape.iter().product();

    let mut pairs = Vec::new();
    let mut condition1_failures = Vec::new();
    for (i, (wi, si)) in subs.iter().enumerate() {
        for (wj, sj) in &subs[i + 1..] {
            let mut zero_shifts = 0;
            let mut odo = Odometer::new(&block_shape);
            loop {
                let mut v = CyclotomicValue::zero(a.modulus());
                correlation_at(si, sj, odo.index(), &mut v);
                if test.is_zero(&v) {
                    zero_shifts += 1;
                } else {
                    condition1_failures.push(Condition1Failure {
                        first: wi.clone(),
                        second: wj.clone(),
                        shift: ShiftVector::from_index(odo.index()),
                    });
                }
                if !odo.advance() {
                    break;
                }
            }
            pairs.push(PairCheck {
                first: wi.clone(),
                second: wj.clone(),
                zero_shifts,
                total_shifts,
            });
        }
    }

    let mut summed = Vec::with_capacity(total_shifts);
    let mut condition2_failures = Vec::new();
    let mut odo = Odometer::new(&block_shape);
    let mut peak = true;
    loop {
        let mut v = CyclotomicValue::zero(a.modulus());
        for (_, sub) in &subs {
            correlation_at(sub, sub, odo.index(), &mut v);
        }
        if !peak && !test.is_zero(&v) {
            condition2_failures.push(ShiftVector::from_index(odo.index()));
        }
        summed.push(v);
        peak = false;
        if !odo.advance() {
            break;
        }
    }
    debug_assert_eq!(summed[0].coeffs()[0], a.volume() as i64);

    let holds = condition1_failures.is_empty() && condition2_failures.is_empty();
    Ok(PropertyReport {
        property,
        divisors: divisors.to_vec(),
        holds,
        pairs,
        condition1_failures,
        condition2_failures,
        summary_table: Some(CorrelationTable::new(
            block_shape,
            CorrelationValues::Exact(summed),
        )),
        witness: None,
        notes: if property == PropertyKind::Gaop {
            alloc::vec![SHIFT_LATTICE_NOTE]
        } else {
            Vec::new()
        },
    })
}

/// Perfection wrapped as a report.
pub fn perfect_report(a: &ExponentArray) -> PropertyReport {
    let verdict = is_perfect_with(a, &ZeroTest::new(a.modulus()));
    PropertyReport {
        property: PropertyKind::Perfect,
        divisors: Vec::new(),
        holds: verdict.is_perfect(),
        pairs: Vec::new(),
        condition1_failures: Vec::new(),
        condition2_failures: Vec::new(),
        summary_table: None,
        witness: verdict.witness().cloned(),
        notes: Vec::new(),
    }
}

/// GAOP together with both perfection claims it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub gaop: PropertyReport,
    pub array: Perfection,
    /// Perfection of the 2n-dimensional associated array.
    pub associated: Perfection,
}

impl ChainReport {
    /// GAOP implies both the array and its associated array are perfect.
    pub fn implication_holds(&self) -> bool {
        !self.gaop.holds || (self.array.is_perfect() && self.associated.is_perfect())
    }
}

pub fn verify_theorem_chain(a: &ExponentArray, d: usize) -> Result<ChainReport> {
    let gaop = gaop_check(a, d)?;
    let test = ZeroTest::new(a.modulus());
    let associated = associate_per_axis(a, &alloc::vec![d; a.ndim()])?;
    Ok(ChainReport {
        gaop,
        array: is_perfect_with(a, &test),
        associated: is_perfect_with(associated.base(), &test),
    })
}

/// GAOP verdict for every divisor `d >= 2` of all extents.
pub fn divisor_sweep(a: &ExponentArray) -> Vec<(usize, bool)> {
    let smallest = a.shape().iter().copied().min().unwrap_or(1);
    (2..=smallest)
        .filter(|d| a.shape().iter().all(|m| m % d == 0))
        .map(|d| (d, gaop_check(a, d).map(|r| r.holds).unwrap_or(false)))
        .collect()
}
