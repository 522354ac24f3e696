// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Clifford algebras as quantum-gate algebras.
//!
//! The complex algebra Cl(2n, ℂ) is handled symbolically on the basis of
//! n-qubit Pauli strings ([`pauli`]), realized as dense 2ⁿ×2ⁿ matrices
//! ([`matrix`]) and applied to state vectors ([`state`]). Real algebras
//! Cl(m, l) with rotors live in [`real`], and fermionic creation and
//! annihilation operators in [`fermion`].
//!
//! Conventions shared by every module:
//!
//! * qubit `k` is bit `k` of the Pauli masks and the `k`-th tensor factor
//!   counted from the right;
//! * the basis state `|l₁ l₂ … lₙ⟩` has index `Σ l_k 2^{n-k}`, so `l₁` is
//!   the most significant bit and belongs to qubit `n-1`;
//! * in a Kronecker product the leftmost factor selects the outer 2×2 block.

pub mod error;
pub mod fermion;
pub mod literal;
pub mod matrix;
pub mod pauli;
pub mod real;
pub mod state;

pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use pauli::{CliffordElement, Letter, PauliString};
pub use real::{Blade, Multivector, Rotor, Signature};
pub use state::StateVector;

pub use num_complex::Complex64;
