// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Real Clifford algebras Cl(m, l).
//!
//! Generators `e_1 … e_{m+l}` are stored 0-based; the first `m` square to
//! −1 and the remaining `l` to +1. A basis blade is a bit mask read as the
//! ascending product of its generators. Cl(2, 0) is the quaternion algebra
//! and Cl(0, 2) ≅ M₂(ℝ).

mod blade;
mod embed;
mod even;
mod multivector;
mod rotor;

pub use blade::{Blade, Signature, MAX_GENERATORS};
pub use embed::{embed_pauli, matrix_rep_cl02};
pub use even::{even_iso, even_iso_inverse, reduced_signature};
pub use multivector::Multivector;
pub use rotor::{rotor_from_vectors, Rotor, UNIT_TOL};
