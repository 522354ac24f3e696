// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::error::{Error, Result};
use crate::pauli::CliffordElement;

/// Largest supported qubit count; masks are one machine word.
pub const MAX_QUBITS: usize = 64;

/// Single-qubit Pauli letter, encoded by its `(x, z)` bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::I, Letter::X, Letter::Y, Letter::Z];

    pub fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCount { n, max: MAX_QUBITS })
    }
}

/// `i^phase · P_{n-1} ⊗ … ⊗ P_0` with `P_k` read from bit `k` of the masks.
///
/// With phase 0 the dense realization is literally the Kronecker product of
/// the letters `I, X, Y, Z`; in particular the `(1, 1)` letter is `σy`, not
/// `σx σz`. Such strings are Hermitian and square to the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: u8,
    x: u64,
    z: u64,
    phase: u8,
}

impl PauliString {
    pub fn new(n: usize, x_mask: u64, z_mask: u64, phase: u8) -> Result<Self> {
        check_qubits(n)?;
        let mask = low_mask(n);
        if x_mask & !mask != 0 || z_mask & !mask != 0 {
            return Err(Error::Parse(format!(
                "mask bits beyond qubit {} are set",
                n - 1
            )));
        }
        Ok(PauliString {
            n: n as u8,
            x: x_mask,
            z: z_mask,
            phase: phase & 3,
        })
    }

    // Caller guarantees the masks fit in `n` bits.
    pub(crate) fn from_raw(n: usize, x: u64, z: u64, phase: u8) -> Self {
        debug_assert!(x & !low_mask(n) == 0 && z & !low_mask(n) == 0);
        PauliString {
            n: n as u8,
            x,
            z,
            phase: phase & 3,
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 0, 0)
    }

    /// Builds a phase-0 string from letters written left to right, so the
    /// first letter sits on qubit `n-1` and the last on qubit 0.
    pub fn from_letters(letters: &[Letter]) -> Result<Self> {
        let n = letters.len();
        check_qubits(n)?;
        let (mut x, mut z) = (0u64, 0u64);
        for (pos, letter) in letters.iter().enumerate() {
            let qubit = n - 1 - pos;
            let (bx, bz) = letter.bits();
            x |= (bx as u64) << qubit;
            z |= (bz as u64) << qubit;
        }
        Ok(Self::from_raw(n, x, z, 0))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn with_phase(self, phase: u8) -> Self {
        PauliString {
            phase: phase & 3,
            ..self
        }
    }

    /// The same letters with phase 0.
    pub fn canonical(self) -> Self {
        self.with_phase(0)
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        Letter::from_bits(self.x >> qubit & 1 == 1, self.z >> qubit & 1 == 1)
    }

    /// Letters from the leftmost tensor factor (qubit `n-1`) to qubit 0.
    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n()).rev().map(|q| self.letter(q)).collect()
    }

    pub fn letters_string(&self) -> String {
        self.letters().into_iter().map(Letter::as_char).collect()
    }

    /// Number of `Y` letters.
    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0 && self.phase == 0
    }

    /// Hermitian exactly when the global factor is ±1.
    pub fn is_hermitian(&self) -> bool {
        self.phase & 1 == 0
    }

    /// Exact product `self · rhs`.
    ///
    /// A phase-0 string equals `i^{#Y} X^x Z^z` (per qubit, X before Z).
    /// Moving `Z^{z₁}` past `X^{x₂}` costs `(-1)^{|z₁ ∧ x₂|}`, and the
    /// result is converted back to letter form by removing `i^{#Y}` of
    /// the product masks.
    pub fn mul(&self, rhs: &PauliString) -> Result<PauliString> {
        if self.n != rhs.n {
            return Err(Error::QubitMismatch {
                left: self.n(),
                right: rhs.n(),
            });
        }
        Ok(self.mul_unchecked(rhs))
    }

    pub(crate) fn mul_unchecked(&self, rhs: &PauliString) -> PauliString {
        let x = self.x ^ rhs.x;
        let z = self.z ^ rhs.z;
        let swaps = (self.z & rhs.x).count_ones();
        let y_out = (x & z).count_ones();
        let phase = self.phase as u32
            + rhs.phase as u32
            + self.y_count()
            + rhs.y_count()
            + 2 * swaps
            + 3 * y_out;
        PauliString {
            n: self.n,
            x,
            z,
            phase: (phase & 3) as u8,
        }
    }

    /// Inverse in the Pauli group: a phase-0 string is its own inverse.
    pub fn inverse(&self) -> PauliString {
        self.with_phase((4 - self.phase) & 3)
    }

    pub fn adjoint(&self) -> PauliString {
        self.inverse()
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        ((self.x & other.z).count_ones() + (self.z & other.x).count_ones()).is_multiple_of(2)
    }

    /// All 4ⁿ phase-0 strings in canonical `(z, x)` order.
    pub fn basis(n: usize) -> Result<impl Iterator<Item = PauliString>> {
        check_qubits(n)?;
        if n > 31 {
            return Err(Error::QubitCount { n, max: 31 });
        }
        let side = 1u64 << n;
        Ok((0..side).flat_map(move |z| (0..side).map(move |x| PauliString::from_raw(n, x, z, 0))))
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["", "i·", "-", "-i·"][self.phase as usize];
        write!(f, "{prefix}{}", self.letters_string())
    }
}

/// The Hermitian generator `ě_j` of Cl(2n, ℂ), `0 ≤ j < 2n`.
///
/// For `j = 2k` it is `I ⊗ … ⊗ I ⊗ σx ⊗ σz^{⊗k}` and for `j = 2k+1` the
/// same with `σy`; the `σz` string covers qubits `0..k`.
pub fn generator(n: usize, j: usize) -> Result<PauliString> {
    check_qubits(n)?;
    if j >= 2 * n {
        return Err(Error::GeneratorIndex {
            index: j,
            count: 2 * n,
        });
    }
    let k = j / 2;
    let x = 1u64 << k;
    let z = low_mask(k) | if j % 2 == 1 { x } else { 0 };
    Ok(PauliString::from_raw(n, x, z, 0))
}

/// `ab + ba` as an algebra element.
pub fn anticommutator(a: &PauliString, b: &PauliString) -> Result<CliffordElement> {
    let ab = CliffordElement::from(a.mul(b)?);
    let ba = CliffordElement::from(b.mul(a)?);
    ab.try_add(&ba)
}
