// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Grassmann and fermionic operators inside Cl(2n, ℂ).
//!
//! Mode `l` lives on qubit `l`. With `ě_j` the Hermitian generators,
//!
//! * `a_l  = (ě_{2l} + i ě_{2l+1}) / 2 = I ⊗ … ⊗ (σx + iσy)/2 ⊗ σz^{⊗l}`,
//! * `a†_l = (ě_{2l} − i ě_{2l+1}) / 2`,
//! * `d_l  = e_{2l} + i e_{2l+1}` with `e_j = −i ě_j` (squares to −1).
//!
//! `(σx + iσy)/2 = |0⟩⟨1|`, so `a_l` empties an occupied mode, and the
//! `σz` string contributes `(−1)^{#occupied modes below l}`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::to_matrix;
use crate::pauli::{generator, CliffordElement, MAX_QUBITS};
use crate::state::StateVector;

/// Largest mode count for the dense cross-check in [`verify_car`].
pub const MAX_DENSE_MODES: usize = 6;

fn check_mode(n: usize, l: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::QubitCount { n, max: MAX_QUBITS });
    }
    if l >= n {
        return Err(Error::ModeIndex { mode: l, n });
    }
    Ok(())
}

// α ě_{2l} + β ě_{2l+1}
fn generator_pair(
    n: usize,
    l: usize,
    alpha: Complex64,
    beta: Complex64,
) -> Result<CliffordElement> {
    check_mode(n, l)?;
    CliffordElement::from_terms(
        n,
        [
            (generator(n, 2 * l)?, alpha),
            (generator(n, 2 * l + 1)?, beta),
        ],
    )
}

/// Nilpotent Grassmann generator `d_l = e_{2l} + i e_{2l+1}`.
pub fn grassmann_d(n: usize, l: usize) -> Result<CliffordElement> {
    // e_{2l} = −i ě_{2l};  i e_{2l+1} = i (−i) ě_{2l+1} = ě_{2l+1}
    generator_pair(n, l, Complex64::new(0.0, -1.0), Complex64::new(1.0, 0.0))
}

pub fn annihilation(n: usize, l: usize) -> Result<CliffordElement> {
    generator_pair(n, l, Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.5))
}

pub fn creation(n: usize, l: usize) -> Result<CliffordElement> {
    generator_pair(n, l, Complex64::new(0.5, 0.0), Complex64::new(0.0, -0.5))
}

/// Occupation number `N_l = a†_l a_l`.
pub fn number_operator(n: usize, l: usize) -> Result<CliffordElement> {
    creation(n, l)?.try_mul(&annihilation(n, l)?)
}

/// Which of the three canonical anticommutation relations a check covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarFamily {
    /// `{a_i, a_j} = 0`
    AnnihilationPair,
    /// `{a†_i, a†_j} = 0`
    CreationPair,
    /// `{a†_i, a_j} = δ_ij`
    Mixed,
}

impl CarFamily {
    pub const ALL: [CarFamily; 3] = [
        CarFamily::AnnihilationPair,
        CarFamily::CreationPair,
        CarFamily::Mixed,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CarFamily::AnnihilationPair => "{a_i, a_j} = 0",
            CarFamily::CreationPair => "{a+_i, a+_j} = 0",
            CarFamily::Mixed => "{a+_i, a_j} = delta_ij",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CarCheck {
    pub family: CarFamily,
    pub i: usize,
    pub j: usize,
    /// Largest coefficient of `anticommutator − expected`; 0 when exact.
    pub symbolic_violation: f64,
    /// Max-entry error of the dense anticommutator, when computed.
    pub dense_violation: Option<f64>,
}

impl CarCheck {
    pub fn passed(&self, dense_tol: f64) -> bool {
        self.symbolic_violation == 0.0 && self.dense_violation.is_none_or(|v| v <= dense_tol)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CarReport {
    pub n: usize,
    pub checks: Vec<CarCheck>,
}

impl CarReport {
    pub fn max_symbolic_violation(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.symbolic_violation)
            .fold(0.0, f64::max)
    }

    pub fn max_dense_violation(&self) -> Option<f64> {
        self.checks
            .iter()
            .filter_map(|c| c.dense_violation)
            .reduce(f64::max)
    }

    pub fn passed(&self, dense_tol: f64) -> bool {
        self.checks.iter().all(|c| c.passed(dense_tol))
    }
}

/// Checks all three relation families over every ordered pair `(i, j)`.
///
/// The symbolic check is exact. For `n <= MAX_DENSE_MODES` the same
/// relations are also evaluated on Kronecker-built matrices.
pub fn verify_car(n: usize) -> Result<CarReport> {
    check_mode(n, 0)?;
    let a: Vec<_> = (0..n).map(|l| annihilation(n, l)).collect::<Result<_>>()?;
    let ad: Vec<_> = (0..n).map(|l| creation(n, l)).collect::<Result<_>>()?;
    let dense = if n <= MAX_DENSE_MODES {
        let am: Vec<_> = a.iter().map(to_matrix).collect::<Result<_>>()?;
        let adm: Vec<_> = ad.iter().map(to_matrix).collect::<Result<_>>()?;
        Some((am, adm))
    } else {
        None
    };
    let zero = CliffordElement::zero(n)?;
    let one = CliffordElement::identity(n)?;
    let mut checks = Vec::with_capacity(3 * n * n);
    for family in CarFamily::ALL {
        for i in 0..n {
            for j in 0..n {
                let (left, right) = match family {
                    CarFamily::AnnihilationPair => (&a[i], &a[j]),
                    CarFamily::CreationPair => (&ad[i], &ad[j]),
                    CarFamily::Mixed => (&ad[i], &a[j]),
                };
                let expected = if family == CarFamily::Mixed && i == j {
                    &one
                } else {
                    &zero
                };
                let symbolic_violation = left.anticommutator(right)?.max_abs_diff(expected)?;
                let dense_violation = match &dense {
                    Some((am, adm)) => {
                        let (l, r) = match family {
                            CarFamily::AnnihilationPair => (&am[i], &am[j]),
                            CarFamily::CreationPair => (&adm[i], &adm[j]),
                            CarFamily::Mixed => (&adm[i], &am[j]),
                        };
                        let ac = l.try_mul(r)?.try_add(&r.try_mul(l)?)?;
                        Some(ac.max_abs_diff(&to_matrix(expected)?)?)
                    }
                    None => None,
                };
                checks.push(CarCheck {
                    family,
                    i,
                    j,
                    symbolic_violation,
                    dense_violation,
                });
            }
        }
    }
    Ok(CarReport { n, checks })
}

/// Applies `op` to the occupation basis state with `occupation[l]` the
/// occupation of mode `l`.
pub fn apply_fermionic(op: &CliffordElement, occupation: &[u8]) -> Result<StateVector> {
    if occupation.len() != op.n() {
        return Err(Error::QubitMismatch {
            left: op.n(),
            right: occupation.len(),
        });
    }
    // Basis bits are written from qubit n-1 down to qubit 0.
    let bits: Vec<u8> = occupation.iter().rev().copied().collect();
    StateVector::basis_state(&bits)?.apply_element(op)
}
