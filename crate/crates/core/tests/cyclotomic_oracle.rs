//! The cofactor zero test against an independent construction of the
//! cyclotomic polynomial and a floating-point evaluation.

use perfect_arrays_core::cyclotomic::cyclotomic_polynomial;
use perfect_arrays_core::{CyclotomicValue, ZeroTest};
use proptest::prelude::*;

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient and remainder of schoolbook division by a monic polynomial.
fn long_division(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut rem = num.to_vec();
    let dl = den.len();
    if rem.len() < dl {
        return (vec![0], rem);
    }
    let mut quot = vec![0; rem.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dl - 1];
        quot[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    rem.truncate(dl - 1);
    (quot, rem)
}

/// `prod_{d | n} (x^d - 1)^{mu(n/d)}`.
fn phi_by_mobius(n: usize) -> Vec<i64> {
    let xd = |d: usize| {
        let mut p = vec![0; d + 1];
        p[0] = -1;
        p[d] = 1;
        p
    };
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut num = vec![1];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            num = mul(&num, &xd(d));
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            let (q, r) = long_division(&num, &xd(d));
            assert!(r.iter().all(|&c| c == 0));
            num = q;
        }
    }
    num
}

fn zero_by_long_division(coeffs: &[i64]) -> bool {
    let phi = phi_by_mobius(coeffs.len());
    let (_, r) = long_division(coeffs, &phi);
    r.iter().all(|&c| c == 0)
}

#[test]
fn phi_matches_mobius_product() {
    for n in 1..=120 {
        assert_eq!(cyclotomic_polynomial(n), phi_by_mobius(n), "n = {n}");
    }
}

#[test]
fn structured_zeros() {
    for r in 2..=30usize {
        let test = ZeroTest::new(r as u32);
        for d in (2..=r).filter(|d| r % d == 0) {
            // Sum over a coset of the order-d subgroup.
            for shift in 0..r / d {
                let mut v = CyclotomicValue::zero(r as u32);
                for j in 0..d {
                    v.accumulate((shift + j * r / d) as i64);
                }
                assert!(test.is_zero(&v), "r={r} d={d}");
                assert!(zero_by_long_division(v.coeffs()));
            }
        }
    }
}

fn unit(turns: f64) -> num_complex::Complex64 {
    let t = 2.0 * std::f64::consts::PI * turns;
    num_complex::Complex64::new(t.cos(), t.sin())
}

fn abs(z: num_complex::Complex64) -> f64 {
    z.re.hypot(z.im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn agrees_with_float_and_division(r in 1u32..=24, seed in proptest::collection::vec(-8i64..=8, 24)) {
        let coeffs = seed[..r as usize].to_vec();
        let v = CyclotomicValue::from_coeffs(coeffs.clone()).unwrap();
        let exact = v.is_zero();
        prop_assert_eq!(exact, zero_by_long_division(&coeffs));
        prop_assert_eq!(exact, abs(v.to_complex()) < 1e-9);
    }

    #[test]
    fn zero_cosets_plus_noise(r in 2u32..=24, noise in proptest::collection::vec(-3i64..=3, 24), k in 0usize..24) {
        // Add a multiple of a vanishing subgroup sum, then compare verdicts.
        let r_us = r as usize;
        let mut coeffs = noise[..r_us].to_vec();
        let base = CyclotomicValue::from_coeffs(coeffs.clone()).unwrap().is_zero();
        let p = (2..=r_us).find(|p| r_us % p == 0).unwrap();
        for j in 0..p {
            coeffs[(k + j * r_us / p) % r_us] += 5;
        }
        prop_assert_eq!(CyclotomicValue::from_coeffs(coeffs).unwrap().is_zero(), base);
    }

    #[test]
    fn accumulation_order_is_irrelevant(r in 1u32..=30, mut exps in proptest::collection::vec(-1000i64..1000, 0..64)) {
        let mut a = CyclotomicValue::zero(r);
        for &e in &exps {
            a.accumulate(e);
        }
        exps.reverse();
        let mut b = CyclotomicValue::zero(r);
        for &e in &exps {
            b.accumulate(e);
        }
        prop_assert_eq!(&a, &b);
        let c = a.to_complex();
        let direct: num_complex::Complex64 = exps
            .iter()
            .map(|&e| unit(e as f64 / r as f64))
            .sum();
        prop_assert!(abs(c - direct) < 1e-9);
    }
}
