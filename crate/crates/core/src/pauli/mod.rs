// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Symbolic algebra of Cl(2n, ℂ) on the Pauli-string basis.
//!
//! A [`PauliString`] is a phased basis element `i^phase · σ ⊗ … ⊗ σ` stored
//! as two bit masks; products only touch the masks and an exact mod-4 phase.
//! A [`CliffordElement`] is a sparse complex combination of phase-free
//! strings, i.e. an arbitrary element of the algebra.

mod element;
mod string;
mod text;

pub use element::{CliffordElement, DEFAULT_PRUNE_TOL};
pub use string::{anticommutator, generator, Letter, PauliString, MAX_QUBITS};
pub use text::Precision;

use num_complex::Complex64;

/// `c · i^k`, computed exactly by swapping and negating parts.
pub(crate) fn times_i_pow(c: Complex64, k: u8) -> Complex64 {
    match k & 3 {
        0 => c,
        1 => Complex64::new(-c.im, c.re),
        2 => Complex64::new(-c.re, -c.im),
        _ => Complex64::new(c.im, -c.re),
    }
}
