//! Generators for perfect sequences and arrays in index notation.
//!
//! One-dimensional families: Chu, Frank, Milewski and the floor construction
//! over `2mn^k` roots. Multidimensional families are built as 2m-dimensional
//! generator arrays and concatenated (see [`crate::association`]):
//!
//! | family      | generator exponent                                              | modulus   |
//! |-------------|-----------------------------------------------------------------|-----------|
//! | `gfrank`    | `prod_{n>=m} i_n + sum_{n<m} i_n i_{n+m}`                        | `d`       |
//! | `floor2d`   | `floor(i j / 2d)` on the `2d^2 x 2d^2` array                     | `d`       |
//! | `floor-nd`  | `floor(sum_{n<m} i_n i_{n+m} / 2d)` on `2m` axes of extent `2d^2`| `d`       |
//! | `gmilewski` | Chu factors plus the `gfrank` exponent                           | `r^(k+1)` |
//!
//! The exponent formulas are evaluated on 1-based indices for `gfrank`,
//! `floor2d` and `floor-nd`, and on 0-based indices for `gmilewski`, the
//! conventions under which the commonly tabulated arrays come out. Both
//! origins give perfect arrays; [`IndexOrigin`] selects the other one.

use alloc::vec;
use core::fmt;

use crate::array::checked_volume;
use crate::association::AssociatedArray;
use crate::{Error, ExponentArray, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Chu,
    Frank,
    Milewski,
    BlakeFloor,
    GFrank,
    Floor2d,
    FloorNd,
    GMilewski,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Chu,
        Family::Frank,
        Family::Milewski,
        Family::BlakeFloor,
        Family::GFrank,
        Family::Floor2d,
        Family::FloorNd,
        Family::GMilewski,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Chu => "chu",
            Family::Frank => "frank",
            Family::Milewski => "milewski",
            Family::BlakeFloor => "blake-floor",
            Family::GFrank => "gfrank",
            Family::Floor2d => "floor2d",
            Family::FloorNd => "floor-nd",
            Family::GMilewski => "gmilewski",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First value taken by every generator index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum IndexOrigin {
    #[default]
    Zero,
    One,
}

impl IndexOrigin {
    fn offset(self) -> u64 {
        match self {
            IndexOrigin::Zero => 0,
            IndexOrigin::One => 1,
        }
    }
}

/// How the Chu factor of the generalized Milewski family is written in index
/// notation over `r^(k+1)` roots.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum ChuVariant {
    /// `p i(i+1) r^k / 2` for even `r`, `p i(i+1) r^k` for odd `r`.
    #[default]
    Triangular,
    /// `p i^2 r^k / 2` for even `r`, `p i(i+1)/2 r^k` for odd `r`.
    Quadratic,
}

/// A validated-on-use parameter bundle for one generator call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Chu {
        m: u32,
        p: i64,
    },
    Frank {
        n: u32,
    },
    Milewski {
        m: u32,
        k: u32,
        p: i64,
        allow_k0: bool,
    },
    BlakeFloor {
        m: u32,
        n: u32,
        k: u32,
    },
    GFrank {
        d: u32,
        m: u32,
        origin: IndexOrigin,
    },
    Floor2d {
        d: u32,
        origin: IndexOrigin,
        allow_odd: bool,
    },
    FloorNd {
        d: u32,
        m: u32,
        origin: IndexOrigin,
        allow_odd: bool,
    },
    GMilewski {
        r: u32,
        k: u32,
        m: u32,
        p: i64,
        variant: ChuVariant,
        origin: IndexOrigin,
        allow_odd: bool,
    },
}

impl Construction {
    pub fn chu(m: u32) -> Self {
        Construction::Chu { m, p: 1 }
    }

    pub fn frank(n: u32) -> Self {
        Construction::Frank { n }
    }

    pub fn milewski(m: u32, k: u32) -> Self {
        Construction::Milewski {
            m,
            k,
            p: 1,
            allow_k0: false,
        }
    }

    pub fn blake_floor(m: u32, n: u32, k: u32) -> Self {
        Construction::BlakeFloor { m, n, k }
    }

    pub fn gfrank(d: u32, m: u32) -> Self {
        Construction::GFrank {
            d,
            m,
            origin: IndexOrigin::One,
        }
    }

    pub fn floor2d(d: u32) -> Self {
        Construction::Floor2d {
            d,
            origin: IndexOrigin::One,
            allow_odd: false,
        }
    }

    pub fn floor_nd(d: u32, m: u32) -> Self {
        Construction::FloorNd {
            d,
            m,
            origin: IndexOrigin::One,
            allow_odd: false,
        }
    }

    pub fn gmilewski(r: u32, k: u32, m: u32) -> Self {
        Construction::GMilewski {
            r,
            k,
            m,
            p: 1,
            variant: ChuVariant::Triangular,
            origin: IndexOrigin::Zero,
            allow_odd: false,
        }
    }

    /// Same parameters with the odd-parameter override switched on, for
    /// building the documented non-perfect cases.
    pub fn allowing_odd(self) -> Self {
        match self {
            Construction::Floor2d { d, origin, .. } => Construction::Floor2d {
                d,
                origin,
                allow_odd: true,
            },
            Construction::FloorNd { d, m, origin, .. } => Construction::FloorNd {
                d,
                m,
                origin,
                allow_odd: true,
            },
            Construction::GMilewski {
                r,
                k,
                m,
                p,
                variant,
                origin,
                ..
            } => Construction::GMilewski {
                r,
                k,
                m,
                p,
                variant,
                origin,
                allow_odd: true,
            },
            other => other,
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Construction::Chu { .. } => Family::Chu,
            Construction::Frank { .. } => Family::Frank,
            Construction::Milewski { .. } => Family::Milewski,
            Construction::BlakeFloor { .. } => Family::BlakeFloor,
            Construction::GFrank { .. } => Family::GFrank,
            Construction::Floor2d { .. } => Family::Floor2d,
            Construction::FloorNd { .. } => Family::FloorNd,
            Construction::GMilewski { .. } => Family::GMilewski,
        }
    }

    pub fn generate(&self) -> Result<ExponentArray> {
        match *self {
            Construction::Chu { m, p } => chu(m, p),
            Construction::Frank { n } => frank(n),
            Construction::Milewski { m, k, p, allow_k0 } => milewski(m, k, p, allow_k0),
            Construction::BlakeFloor { m, n, k } => blake_floor(m, n, k),
            Construction::GFrank { d, m, origin } => gfrank(d, m, origin),
            Construction::Floor2d {
                d,
                origin,
                allow_odd,
            } => floor2d(d, origin, allow_odd),
            Construction::FloorNd {
                d,
                m,
                origin,
                allow_odd,
            } => floor_nd(d, m, origin, allow_odd),
            Construction::GMilewski {
                r,
                k,
                m,
                p,
                variant,
                origin,
                allow_odd,
            } => gmilewski(r, k, m, p, variant, origin, allow_odd),
        }
    }

    /// The divisor for which the family's orthogonality property is claimed.
    pub fn divisor(&self) -> Option<usize> {
        match *self {
            Construction::Chu { .. } => None,
            Construction::Frank { n } => Some(n as usize),
            Construction::Milewski { m, k, .. } => (m as usize).checked_pow(k),
            Construction::BlakeFloor { .. } => Some(2),
            Construction::GFrank { d, .. }
            | Construction::Floor2d { d, .. }
            | Construction::FloorNd { d, .. } => Some(d as usize),
            Construction::GMilewski { r, k, .. } => (r as usize).checked_pow(k),
        }
    }

    /// Whether perfection of the generated array is a theorem rather than
    /// something to be checked.
    pub fn guaranteed_perfect(&self) -> bool {
        match *self {
            Construction::BlakeFloor { .. } => false,
            Construction::Milewski { k, .. } => k >= 1,
            Construction::Floor2d { d, .. } | Construction::FloorNd { d, .. } => d % 2 == 0,
            Construction::GMilewski { r, .. } => r % 2 == 0,
            _ => true,
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Construction::Chu { m, p } => write!(f, "chu(m={m}, p={p})"),
            Construction::Frank { n } => write!(f, "frank(n={n})"),
            Construction::Milewski { m, k, p, .. } => write!(f, "milewski(m={m}, k={k}, p={p})"),
            Construction::BlakeFloor { m, n, k } => write!(f, "blake-floor(m={m}, n={n}, k={k})"),
            Construction::GFrank { d, m, .. } => write!(f, "gfrank(d={d}, m={m})"),
            Construction::Floor2d { d, .. } => write!(f, "floor2d(d={d})"),
            Construction::FloorNd { d, m, .. } => write!(f, "floor-nd(d={d}, m={m})"),
            Construction::GMilewski { r, k, m, p, .. } => {
                write!(f, "gmilewski(r={r}, k={k}, m={m}, p={p})")
            }
        }
    }
}

fn param(name: &'static str, value: u32, ok: bool, requirement: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value: i64::from(value),
            requirement,
        })
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pow(base: u32, exp: u32) -> Result<u64> {
    u64::from(base).checked_pow(exp).ok_or(Error::Overflow)
}

fn modulus_u32(m: u64) -> Result<u32> {
    u32::try_from(m).map_err(|_| Error::Overflow)
}

fn reduce_p(p: i64, modulus: u64) -> Result<u64> {
    let reduced = p.rem_euclid(modulus as i64) as u64;
    if gcd(reduced, modulus) != 1 {
        return Err(Error::NotCoprime { p, modulus });
    }
    Ok(reduced)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

/// Chu sequence of length `m`: exponents `p i^2` over `2m` roots for even
/// `m`, `p i(i+1)/2` over `m` roots for odd `m`.
pub fn chu(m: u32, p: i64) -> Result<ExponentArray> {
    param("m", m, m >= 1, "m >= 1")?;
    let modulus = if m % 2 == 0 {
        2 * u64::from(m)
    } else {
        u64::from(m)
    };
    let p = reduce_p(p, modulus)?;
    let r = modulus_u32(modulus)?;
    ExponentArray::from_fn(r, vec![m as usize], |idx| {
        let i = idx[0] as u64;
        let base = if m % 2 == 0 { i * i } else { i * (i + 1) / 2 };
        mul_mod(p, base % modulus, modulus)
    })
}

/// Frank sequence of length `n^2` over `n` roots: the `n x n` array
/// `w^(ij)` read row by row.
pub fn frank(n: u32) -> Result<ExponentArray> {
    param("n", n, n >= 1, "n >= 1")?;
    let len = checked_volume(&[n as usize, n as usize])?;
    let modulus = u64::from(n);
    ExponentArray::from_fn(n, vec![len], |idx| {
        let (i, j) = ((idx[0] / n as usize) as u64, (idx[0] % n as usize) as u64);
        i * j % modulus
    })
}

/// Milewski sequence of length `m^(2k+1)` over `m^(k+1)` roots: the
/// `m^(k+1) x m^k` array `u_(i mod m) w^(ij)` read row by row, with `u` the
/// Chu sequence of length `m`.
///
/// With `allow_k0` the degenerate `k = 0` case is built as well; the modulus
/// is then the least common multiple of `m` and the Chu modulus.
pub fn milewski(m: u32, k: u32, p: i64, allow_k0: bool) -> Result<ExponentArray> {
    Ok(milewski_array(m, k, p, allow_k0)?.flatten_row_major())
}

/// The two-dimensional `m^(k+1) x m^k` array whose rows form the Milewski
/// sequence.
pub fn milewski_array(m: u32, k: u32, p: i64, allow_k0: bool) -> Result<ExponentArray> {
    param("m", m, m >= 2, "m >= 2")?;
    param(
        "k",
        k,
        k >= 1 || allow_k0,
        "k >= 1 (k = 0 needs the explicit extension flag)",
    )?;
    let rows = pow(m, k + 1)?;
    let cols = pow(m, k)?;
    let u = chu(m, p)?;
    let chu_modulus = u64::from(u.modulus());
    let modulus = rows / gcd(rows, chu_modulus) * chu_modulus;
    let chu_scale = modulus / chu_modulus;
    let phase_scale = modulus / rows;
    let r = modulus_u32(modulus)?;
    checked_volume(&[rows as usize, cols as usize])?;
    ExponentArray::from_fn(r, vec![rows as usize, cols as usize], |idx| {
        let (i, j) = (idx[0] as u64, idx[1] as u64);
        let chu_term = u64::from(u.exponents()[(i % u64::from(m)) as usize]) * chu_scale;
        (chu_term + mul_mod(i * j % rows, phase_scale, modulus)) % modulus
    })
}

/// Floor construction of length `4mn^(k+1)` over `2mn^k` roots: the
/// `2mn^(k+1) x 2` array `w^floor(i(i+j)/n)` read row by row.
pub fn blake_floor(m: u32, n: u32, k: u32) -> Result<ExponentArray> {
    Ok(blake_floor_array(m, n, k)?.flatten_row_major())
}

pub fn blake_floor_array(m: u32, n: u32, k: u32) -> Result<ExponentArray> {
    param("m", m, m >= 1, "m >= 1")?;
    param("n", n, n >= 1, "n >= 1")?;
    let nk = pow(n, k)?;
    let modulus = 2 * u64::from(m) * nk;
    let rows = modulus.checked_mul(u64::from(n)).ok_or(Error::Overflow)?;
    let r = modulus_u32(modulus)?;
    checked_volume(&[rows as usize, 2])?;
    let n = u64::from(n);
    ExponentArray::from_fn(r, vec![rows as usize, 2], |idx| {
        let (i, j) = (idx[0] as u128, idx[1] as u128);
        ((i * (i + j) / u128::from(n)) % u128::from(modulus)) as u64
    })
}

/// The `2m`-dimensional `d x ... x d` generator
/// `w^(prod_{n=m}^{2m-1} i_n + sum_{n<m} i_n i_{n+m})` over `d` roots.
pub fn gfrank_generator(d: u32, m: u32, origin: IndexOrigin) -> Result<ExponentArray> {
    param("d", d, d >= 1, "d >= 1")?;
    param("m", m, m >= 1, "m >= 1")?;
    let m = m as usize;
    let shape = vec![d as usize; 2 * m];
    checked_volume(&shape)?;
    let modulus = u64::from(d);
    let o = origin.offset();
    ExponentArray::from_fn(d, shape, |idx| gfrank_exponent(idx, m, o, modulus))
}

fn gfrank_exponent(idx: &[usize], m: usize, offset: u64, modulus: u64) -> u64 {
    let at = |n: usize| (idx[n] as u64 + offset) % modulus;
    let product = (m..2 * m).fold(1 % modulus, |acc, n| mul_mod(acc, at(n), modulus));
    let sum = (0..m).fold(0, |acc, n| {
        (acc + mul_mod(at(n), at(n + m), modulus)) % modulus
    });
    (product + sum) % modulus
}

/// `m`-dimensional perfect array of extent `d^2` per axis: the concatenated
/// [`gfrank_generator`].
pub fn gfrank(d: u32, m: u32, origin: IndexOrigin) -> Result<ExponentArray> {
    let generator = gfrank_generator(d, m, origin)?;
    Ok(AssociatedArray::from_base(generator)?.concatenate())
}

fn check_even(name: &'static str, value: u32, allow_odd: bool) -> Result<()> {
    if value % 2 == 1 && !allow_odd {
        return Err(Error::OddParameter {
            name,
            value: u64::from(value),
        });
    }
    Ok(())
}

/// The `2d^2 x 2d^2` array `w^floor(ij/2d)` over `d` roots.
pub fn floor2d(d: u32, origin: IndexOrigin, allow_odd: bool) -> Result<ExponentArray> {
    floor_nd(d, 1, origin, allow_odd)
}

/// The `2m`-dimensional array `w^floor(sum_{n<m} i_n i_{n+m} / 2d)` over `d`
/// roots, extent `2d^2` on every axis.
pub fn floor_nd(d: u32, m: u32, origin: IndexOrigin, allow_odd: bool) -> Result<ExponentArray> {
    param("d", d, d >= 1, "d >= 1")?;
    param("m", m, m >= 1, "m >= 1")?;
    check_even("d", d, allow_odd)?;
    let extent = 2 * pow(d, 2)?;
    let m = m as usize;
    let shape = vec![usize::try_from(extent).map_err(|_| Error::Overflow)?; 2 * m];
    checked_volume(&shape)?;
    let o = u128::from(origin.offset());
    let two_d = 2 * u128::from(d);
    ExponentArray::from_fn(d, shape, |idx| {
        let sum: u128 = (0..m)
            .map(|n| (idx[n] as u128 + o) * (idx[n + m] as u128 + o))
            .sum();
        ((sum / two_d) % u128::from(d)) as u64
    })
}

fn chu_factor(i: u64, r: u64, rk: u64, p: u64, variant: ChuVariant, modulus: u64) -> u64 {
    let tri = (i * (i + 1) / 2) % modulus;
    let base = match (variant, r % 2 == 0) {
        (ChuVariant::Triangular, true) => mul_mod(tri, rk, modulus),
        (ChuVariant::Triangular, false) => mul_mod(2 * tri % modulus, rk, modulus),
        (ChuVariant::Quadratic, true) => mul_mod(i * i % modulus, rk / 2, modulus),
        (ChuVariant::Quadratic, false) => mul_mod(tri, rk, modulus),
    };
    mul_mod(p, base, modulus)
}

/// The `2m`-dimensional generator of the generalized Milewski family, extents
/// `r^(k+1)` on the first `m` axes and `r^k` on the last `m`, over `r^(k+1)`
/// roots. Perfect for every `r >= 2`.
pub fn gmilewski_generator(
    r: u32,
    k: u32,
    m: u32,
    p: i64,
    variant: ChuVariant,
    origin: IndexOrigin,
) -> Result<ExponentArray> {
    param("r", r, r >= 2, "r >= 2")?;
    param("k", k, k >= 1, "k >= 1")?;
    param("m", m, m >= 1, "m >= 1")?;
    let rk = pow(r, k)?;
    let modulus = rk.checked_mul(u64::from(r)).ok_or(Error::Overflow)?;
    let p = reduce_p(p, modulus)?;
    let m = m as usize;
    let mut shape = vec![modulus as usize; m];
    shape.extend(core::iter::repeat(rk as usize).take(m));
    checked_volume(&shape)?;
    let o = origin.offset();
    let root_count = modulus_u32(modulus)?;
    let r = u64::from(r);
    ExponentArray::from_fn(root_count, shape, |idx| {
        let chu: u64 = (0..m)
            .map(|n| chu_factor(idx[n] as u64 + o, r, rk, p, variant, modulus))
            .fold(0, |acc, c| (acc + c) % modulus);
        (chu + gfrank_exponent(idx, m, o, modulus)) % modulus
    })
}

/// `m`-dimensional array of extent `r^(2k+1)` per axis: the concatenated
/// [`gmilewski_generator`]. Perfect for even `r`; odd `r` requires
/// `allow_odd`.
pub fn gmilewski(
    r: u32,
    k: u32,
    m: u32,
    p: i64,
    variant: ChuVariant,
    origin: IndexOrigin,
    allow_odd: bool,
) -> Result<ExponentArray> {
    check_even("r", r, allow_odd)?;
    let generator = gmilewski_generator(r, k, m, p, variant, origin)?;
    Ok(AssociatedArray::from_base(generator)?.concatenate())
}
