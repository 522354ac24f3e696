// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense realization of Cl(2n, ℂ) as 2ⁿ×2ⁿ complex matrices.
//!
//! Matrices are assembled by the block Kronecker rule `a ⊗ A = (a_ij A)`,
//! so the leftmost tensor factor selects the outer block. Max-entry error
//! is the closeness measure used throughout.

mod decompose;
mod dense;
mod expm;
mod io;
mod realize;

pub use decompose::decompose;
pub use dense::{DenseMatrix, MAX_DENSE_QUBITS};
pub use expm::{exp_i_hermitian, exp_i_hermitian_dense};
pub use realize::{letter_matrix, string_matrix, to_matrix};

/// Tolerance for representation identities.
pub const REPRESENTATION_TOL: f64 = 1e-12;
/// Default tolerance for [`DenseMatrix::is_unitary`] and
/// [`DenseMatrix::is_hermitian`].
pub const UNITARY_TOL: f64 = 1e-10;
