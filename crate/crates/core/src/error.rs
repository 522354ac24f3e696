// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit count {n} outside supported range 1..={max}")]
    QubitCount { n: usize, max: usize },

    #[error("generator index {index} out of range for {count} generators")]
    GeneratorIndex { index: usize, count: usize },

    #[error("mode {mode} out of range for {n} modes")]
    ModeIndex { mode: usize, n: usize },

    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error("signature ({m},{l}) exceeds {max} generators")]
    SignatureTooLarge { m: usize, l: usize, max: usize },

    #[error("unsupported signature {found}: {expected}")]
    UnsupportedSignature {
        found: String,
        expected: &'static str,
    },

    #[error("blade mask {mask:#b} invalid for {generators} generators")]
    InvalidBlade { mask: u32, generators: usize },

    #[error("vector has {found} coefficients, expected {expected}")]
    VectorLength { found: usize, expected: usize },

    #[error("element has odd-grade blades; expected an even element")]
    OddGrade,

    #[error("rotor needs an even, non-zero number of vectors, got {0}")]
    OddVectorCount(usize),

    #[error("vector {index} has |Q(v)| = {norm}, expected 1")]
    NonUnitVector { index: usize, norm: f64 },

    #[error("element is not a valid rotor: {0}")]
    InvalidRotor(String),

    #[error("conjugation left the vector space: residual {0:e} outside grade 1")]
    NotGradeOne(f64),

    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("dimension 2^{k} exceeds the dense limit 2^{max}")]
    DenseTooLarge { k: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("coefficient of {term} is not real: {im:e}i")]
    NonRealCoefficient { term: String, im: f64 },

    #[error("invalid bit value {0}; expected 0 or 1")]
    InvalidBit(u8),

    #[error("parse error: {0}")]
    Parse(String),
}
