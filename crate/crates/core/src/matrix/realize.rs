// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::dense::{DenseMatrix, MAX_DENSE_QUBITS};
use crate::pauli::{times_i_pow, CliffordElement, Letter, PauliString};

/// The 2×2 matrix of a single letter.
pub fn letter_matrix(letter: Letter) -> DenseMatrix {
    let (o, z, i) = (
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 1.0),
    );
    DenseMatrix::from_2x2(match letter {
        Letter::I => [[o, z], [z, o]],
        Letter::X => [[z, o], [o, z]],
        Letter::Y => [[z, -i], [i, z]],
        Letter::Z => [[o, z], [z, -o]],
    })
}

fn check_dense(n: usize) -> Result<()> {
    if n > MAX_DENSE_QUBITS {
        Err(Error::DenseTooLarge {
            k: n,
            max: MAX_DENSE_QUBITS,
        })
    } else {
        Ok(())
    }
}

/// Dense matrix of a phased string, built by doubling from qubit 0 up so
/// each new letter becomes the outer block.
pub fn string_matrix(p: &PauliString) -> Result<DenseMatrix> {
    check_dense(p.n())?;
    let mut m = DenseMatrix::identity(1)?;
    for qubit in 0..p.n() {
        m = letter_matrix(p.letter(qubit)).kron(&m)?;
    }
    Ok(m.scale(times_i_pow(Complex64::new(1.0, 0.0), p.phase())))
}

/// `Σ c_I · (Kronecker product of letters)`.
pub fn to_matrix(element: &CliffordElement) -> Result<DenseMatrix> {
    check_dense(element.n())?;
    let mut out = DenseMatrix::zeros(1 << element.n())?;
    for (p, c) in element.terms() {
        out.add_scaled(c, &string_matrix(&p)?)?;
    }
    Ok(out)
}
