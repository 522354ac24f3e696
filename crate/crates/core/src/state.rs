// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! n-qubit state vectors and the action of algebra elements on them.
//!
//! Pauli strings act by an index sweep: `g|L⟩` has a single component at
//! `L ⊕ x_mask` whose phase is an exact power of `i`, so no matrix is ever
//! formed. General elements act by linearity.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::literal::{format_complex, parse_complex};
use crate::matrix::DenseMatrix;
use crate::pauli::{times_i_pow, CliffordElement, PauliString};

/// Largest state vector the library will allocate (2²⁶ amplitudes).
pub const HARD_MAX_QUBITS: usize = 26;
/// Default ceiling for front ends, overridable through [`QUBIT_LIMIT_ENV`].
pub const DEFAULT_MAX_QUBITS: usize = 20;
pub const QUBIT_LIMIT_ENV: &str = "CLIFFQ_MAX_QUBITS";

const PARALLEL_QUBITS: usize = 14;

/// Reads [`QUBIT_LIMIT_ENV`], clamped to [`HARD_MAX_QUBITS`]. Unset or
/// unparsable values give [`DEFAULT_MAX_QUBITS`].
pub fn qubit_limit_from_env() -> usize {
    std::env::var(QUBIT_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_QUBITS, |v| v.min(HARD_MAX_QUBITS))
}

/// `2ⁿ` amplitudes; index `L` has `l₁` (qubit `n-1`) as its top bit.
///
/// The norm is not constrained.
#[derive(Clone, PartialEq, Debug)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

fn check_n(n: usize) -> Result<()> {
    if (1..=HARD_MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCount {
            n,
            max: HARD_MAX_QUBITS,
        })
    }
}

impl StateVector {
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(StateVector {
            n,
            amps: vec![Complex64::new(0.0, 0.0); 1 << n],
        })
    }

    /// `|l₁ l₂ … lₙ⟩` with amplitude 1 at `Σ l_k 2^{n-k}`.
    pub fn basis_state(bits: &[u8]) -> Result<Self> {
        let mut s = Self::zeros(bits.len())?;
        let mut index = 0usize;
        for &b in bits {
            if b > 1 {
                return Err(Error::InvalidBit(b));
            }
            index = index << 1 | b as usize;
        }
        s.amps[index] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    pub fn basis_index(n: usize, index: usize) -> Result<Self> {
        let mut s = Self::zeros(n)?;
        if index >= s.amps.len() {
            return Err(Error::DimensionMismatch {
                left: s.amps.len(),
                right: index,
            });
        }
        s.amps[index] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        let n = len.trailing_zeros() as usize;
        check_n(n)?;
        Ok(StateVector { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    fn check_same(&self, n: usize) -> Result<()> {
        if self.n == n {
            Ok(())
        } else {
            Err(Error::QubitMismatch {
                left: n,
                right: self.n,
            })
        }
    }

    /// `P|ψ⟩` in one sweep over the index space.
    pub fn apply_string(&self, p: &PauliString) -> Result<StateVector> {
        self.check_same(p.n())?;
        let (x, z) = (p.x_mask() as usize, p.z_mask() as usize);
        let base = (p.phase() as u32 + p.y_count()) as u8;
        let src = &self.amps;
        let kernel = |(target, out): (usize, &mut Complex64)| {
            let from = target ^ x;
            let sign = 2 * ((from & z).count_ones() & 1) as u8;
            *out = times_i_pow(src[from], base + sign);
        };
        let mut amps = vec![Complex64::new(0.0, 0.0); src.len()];
        if self.n >= PARALLEL_QUBITS {
            amps.par_iter_mut().enumerate().for_each(kernel);
        } else {
            amps.iter_mut().enumerate().for_each(kernel);
        }
        Ok(StateVector { n: self.n, amps })
    }

    /// `G|ψ⟩ = Σ_I a_I g_I|ψ⟩`.
    pub fn apply_element(&self, g: &CliffordElement) -> Result<StateVector> {
        self.check_same(g.n())?;
        let mut out = Self::zeros(self.n)?;
        for (p, c) in g.terms() {
            let part = self.apply_string(&p)?;
            let add = |(o, a): (&mut Complex64, &Complex64)| *o += c * a;
            if self.n >= PARALLEL_QUBITS {
                out.amps
                    .par_iter_mut()
                    .zip(part.amps.par_iter())
                    .for_each(add);
            } else {
                out.amps.iter_mut().zip(part.amps.iter()).for_each(add);
            }
        }
        Ok(out)
    }

    pub fn apply_unitary_dense(&self, u: &DenseMatrix) -> Result<StateVector> {
        if u.dim() != self.amps.len() {
            return Err(Error::DimensionMismatch {
                left: u.dim(),
                right: self.amps.len(),
            });
        }
        Ok(StateVector {
            n: self.n,
            amps: u.apply(&self.amps)?,
        })
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.check_same(other.n)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// `⟨ψ|H|ψ⟩`.
    pub fn expectation(&self, h: &CliffordElement) -> Result<Complex64> {
        self.inner(&self.apply_element(h)?)
    }

    pub fn scale(&self, c: Complex64) -> StateVector {
        StateVector {
            n: self.n,
            amps: self.amps.iter().map(|a| a * c).collect(),
        }
    }

    pub fn try_add(&self, other: &StateVector) -> Result<StateVector> {
        self.check_same(other.n)?;
        Ok(StateVector {
            n: self.n,
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        self.check_same(other.n)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `qubits n` followed by one amplitude per line in index order.
    pub fn to_text(&self) -> String {
        let mut out = format!("qubits {}\n", self.n);
        for &a in &self.amps {
            out.push_str(&format_complex(a));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty state file".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["qubits", n] => n
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad qubit count `{n}`")))?,
            _ => {
                return Err(Error::Parse(format!(
                    "expected `qubits n`, found `{header}`"
                )))
            }
        };
        check_n(n)?;
        let amps = lines.map(parse_complex).collect::<Result<Vec<_>>>()?;
        if amps.len() != 1 << n {
            return Err(Error::Parse(format!(
                "expected {} amplitudes, found {}",
                1usize << n,
                amps.len()
            )));
        }
        Ok(StateVector { n, amps })
    }
}
