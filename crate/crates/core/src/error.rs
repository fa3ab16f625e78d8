use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("shape must have at least one dimension")]
    EmptyShape,
    #[error("shape {0:?} has a zero extent")]
    ZeroExtent(Vec<usize>),
    #[error("shape calls for {expected} exponents but {actual} were given")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("shapes differ: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<usize>, right: Vec<usize> },
    #[error("moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("expected a one-dimensional sequence, got shape {0:?}")]
    NotSequence(Vec<usize>),
    #[error("divisor {divisor} does not divide extent {extent} of axis {axis}")]
    NotDivisible {
        axis: usize,
        extent: usize,
        divisor: usize,
    },
    #[error("sequence length {length} is not a multiple of d^2 = {square}")]
    NotAopLength { length: usize, square: usize },
    #[error("coordinate {value} is outside 0..{bound} on axis {axis}")]
    OutOfRange {
        axis: usize,
        value: usize,
        bound: usize,
    },
    #[error("array volume {0} exceeds the supported bound of 2^31 entries")]
    VolumeTooLarge(usize),
    #[error("{name} = {value} violates {requirement}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        requirement: &'static str,
    },
    #[error("p = {p} is not coprime to the modulus {modulus}")]
    NotCoprime { p: i64, modulus: u64 },
    #[error("{name} = {value} is odd; this family is only perfect for even {name} (an explicit override builds it anyway)")]
    OddParameter { name: &'static str, value: u64 },
    #[error("parameters overflow the supported exponent range")]
    Overflow,
}
