//! Perfect n-dimensional arrays over roots of unity.
//!
//! Arrays are held in index notation: an [`ExponentArray`] over modulus `r`
//! stores the integer exponent `e` of each entry `exp(2*pi*i*e/r)`. On top of
//! that value type the crate provides
//!
//! - exact sums of roots of unity with a decidable zero test ([`cyclotomic`]),
//! - periodic cross- and autocorrelation over the full shift lattice
//!   ([`correlation`]),
//! - the block reshape between an n-dimensional array and its 2n-dimensional
//!   associated array ([`association`]),
//! - generators for the Frank, Milewski, Chu and floor families and their
//!   multidimensional generalizations ([`constructions`]),
//! - decision procedures for the array orthogonality property and its
//!   n-dimensional generalization ([`checkers`]).
//!
//! Everything here is pure computation over `alloc`; file formats, the FFT
//! backend and the command-line tool live in the `perfect-arrays` crate.

#![no_std]

extern crate alloc;

pub mod array;
pub mod association;
pub mod checkers;
pub mod constructions;
pub mod correlation;
pub mod cyclotomic;
mod error;

pub use array::{ExponentArray, ShiftVector};
pub use association::AssociatedArray;
pub use checkers::{ChainReport, PropertyKind, PropertyReport};
pub use constructions::{ChuVariant, Construction, Family, IndexOrigin};
pub use correlation::{CorrelationTable, CorrelationValues, Perfection};
pub use cyclotomic::{CyclotomicValue, ZeroTest};
pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
