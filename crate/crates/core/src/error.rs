use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("mask {mask:#x} does not fit in {n} generators")]
    MaskOutOfRange { mask: u32, n: usize },
    #[error("generator v{index} does not exist for n = {n}")]
    GeneratorIndex { index: usize, n: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vector length {got} does not match ambient length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("modulus {0} must be below 2^32")]
    ModulusTooLarge(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("delta index k = {0} is out of range 0..=3")]
    DeltaIndex(u32),
    #[error("{what} requires n >= {min}, got n = {n}")]
    NTooSmall {
        what: &'static str,
        min: usize,
        n: usize,
    },
    #[error("n = {n} exceeds the cap of {cap}; raise it explicitly to proceed")]
    NTooLarge { n: usize, cap: usize },
    #[error("E_{0} is of infinite type")]
    InfiniteType(usize),
    #[error("empty generator list")]
    NoGenerators,
    #[error("generator is zero")]
    ZeroGenerator,
    #[error("basis is not closed: bracket of {left:#x} and {right:#x} leaves the span")]
    NotClosed { left: u32, right: u32 },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
