//! Exact sums of r-th roots of unity.
//!
//! A value is a multiplicity vector `c` of length `r` standing for
//! `sum_k c[k] * w^k` with `w = exp(2*pi*i/r)`. Such a sum vanishes exactly
//! when the polynomial `sum_k c[k] x^k` is divisible by the cyclotomic
//! polynomial `Phi_r`. Writing `x^r - 1 = Phi_r * Psi_r`, divisibility by
//! `Phi_r` is equivalent to `c * Psi_r == 0` in `Z[x]/(x^r - 1)`, a cyclic
//! convolution whose coefficients never exceed `max|c| * |Psi_r|_1`.
//!
//! Coefficients are `i64`. A correlation coefficient counts array entries, so
//! it is bounded by the volume cap `MAX_VOLUME = 2^31` enforced on every
//! array; the zero test accumulates in `i128`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    coeffs: Vec<i64>,
}

impl CyclotomicValue {
    /// The empty sum in the `modulus`-th roots of unity.
    ///
    /// # Panics
    ///
    /// If `modulus` is zero.
    pub fn zero(modulus: u32) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        CyclotomicValue {
            coeffs: vec![0; modulus as usize],
        }
    }

    /// Wraps a multiplicity vector; its length is the modulus.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroModulus);
        }
        Ok(CyclotomicValue { coeffs })
    }

    pub fn modulus(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Adds one copy of `w^exponent`.
    pub fn accumulate(&mut self, exponent: i64) {
        let r = self.coeffs.len() as i64;
        self.coeffs[exponent.rem_euclid(r) as usize] += 1;
    }

    pub(crate) fn add_at(&mut self, reduced: usize, count: i64) {
        self.coeffs[reduced] += count;
    }

    /// Complex conjugate: `w^k -> w^-k`.
    pub fn conj(&self) -> Self {
        let r = self.coeffs.len();
        let coeffs = (0..r).map(|k| self.coeffs[(r - k) % r]).collect();
        CyclotomicValue { coeffs }
    }

    /// True iff every coefficient is zero (a sufficient, not necessary, test).
    pub fn is_trivially_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Exact zero test. Builds the cyclotomic tables for this modulus on every
    /// call; hot loops should hold a [`ZeroTest`] instead.
    pub fn is_zero(&self) -> bool {
        ZeroTest::new(self.modulus()).is_zero(self)
    }

    /// The represented complex number in double precision.
    pub fn to_complex(&self) -> Complex64 {
        let r = self.coeffs.len() as f64;
        let (re, im) = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold((0.0, 0.0), |(re, im), (k, &c)| {
                let angle = 2.0 * PI * k as f64 / r;
                (
                    re + c as f64 * libm::cos(angle),
                    im + c as f64 * libm::sin(angle),
                )
            });
        Complex64::new(re, im)
    }
}

/// Precomputed `Phi_r` and its cofactor `Psi_r = (x^r - 1) / Phi_r` for one
/// modulus. Immutable once built, so it can be shared across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroTest {
    modulus: u32,
    phi: Vec<i64>,
    psi_terms: Vec<(usize, i64)>,
}

impl ZeroTest {
    pub fn new(modulus: u32) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        let n = modulus as usize;
        let phi = cyclotomic_polynomial(n);
        let mut x_n_minus_1 = vec![0i64; n + 1];
        x_n_minus_1[0] = -1;
        x_n_minus_1[n] = 1;
        let psi = exact_quotient(&x_n_minus_1, &phi);
        let psi_terms = psi
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect();
        ZeroTest {
            modulus,
            phi,
            psi_terms,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Coefficients of `Phi_r`, constant term first.
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// # Panics
    ///
    /// If `value` belongs to a different modulus.
    pub fn is_zero(&self, value: &CyclotomicValue) -> bool {
        let c = value.coeffs();
        let n = self.modulus as usize;
        assert_eq!(c.len(), n, "value modulus does not match the zero test");
        if c.iter().all(|&x| x == 0) {
            return true;
        }
        (0..n).all(|out| {
            let acc: i128 = self
                .psi_terms
                .iter()
                .map(|&(k, p)| i128::from(c[(out + n - k) % n]) * i128::from(p))
                .sum();
            acc == 0
        })
    }
}

/// `Phi_n` by repeated exact division of `x^n - 1` by `Phi_d` for every proper
/// divisor `d` of `n`. Coefficients are listed constant term first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic index must be at least 1");
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut table: Vec<(usize, Vec<i64>)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut poly = vec![0i64; d + 1];
        poly[0] = -1;
        poly[d] = 1;
        for (e, phi_e) in &table {
            if d % e == 0 && *e != d {
                poly = exact_quotient(&poly, phi_e);
            }
        }
        table.push((d, poly));
    }
    table.pop().expect("n is its own divisor").1
}

/// Quotient of `num / den` for monic `den` dividing `num` exactly.
fn exact_quotient(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (quotient, remainder) = divide_monic(num, den);
    debug_assert!(remainder.iter().all(|&c| c == 0), "division was not exact");
    quotient
}

/// Long division of integer polynomials by a monic divisor.
pub(crate) fn divide_monic(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let den_deg = den.len() - 1;
    debug_assert_eq!(den[den_deg], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    if num.len() <= den_deg {
        return (vec![0], rem);
    }
    let mut quotient = vec![0i64; num.len() - den_deg];
    for shift in (0..quotient.len()).rev() {
        let lead = rem[shift + den_deg];
        if lead == 0 {
            continue;
        }
        quotient[shift] = lead;
        for (i, &dc) in den.iter().enumerate() {
            rem[shift + i] -= lead * dc;
        }
    }
    rem.truncate(den_deg.max(1));
    (quotient, rem)
}
