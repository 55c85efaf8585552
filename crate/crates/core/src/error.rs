use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::{GaussianRational, Rational};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(Box<Rational>),
    #[error("empty interval ({lo}, {hi})")]
    EmptyInterval {
        lo: Box<Rational>,
        hi: Box<Rational>,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("component count must be at least 1")]
    ZeroComponents,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix does not have the {0} extension pattern")]
    ContractionPattern(&'static str),
    #[error("congruence matrix is not unimodular (determinant {0})")]
    NotUnimodular(Box<BigInt>),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("point {0} is not on the unit circle")]
    OffUnitCircle(Box<GaussianRational>),
    #[error("matrix is singular")]
    Singular,
    #[error("Alexander polynomial vanishes identically; the limit signature is not certified")]
    ZeroAlexander,
    #[error("bad linking-number key {key:?}: {reason}")]
    LinkingKey { key: String, reason: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
