// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_GENERATORS: usize = 16;

/// `m` generators squaring to −1 followed by `l` squaring to +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    m: usize,
    l: usize,
}

impl Signature {
    pub fn new(m: usize, l: usize) -> Result<Self> {
        if m + l > MAX_GENERATORS {
            return Err(Error::SignatureTooLarge {
                m,
                l,
                max: MAX_GENERATORS,
            });
        }
        Ok(Signature { m, l })
    }

    /// Cl(2, 0), the quaternions.
    pub fn quaternion() -> Self {
        Signature { m: 2, l: 0 }
    }

    /// Number of generators squaring to −1.
    pub fn negative(&self) -> usize {
        self.m
    }

    /// Number of generators squaring to +1.
    pub fn positive(&self) -> usize {
        self.l
    }

    pub fn generators(&self) -> usize {
        self.m + self.l
    }

    /// Number of basis blades, `2^{m+l}`.
    pub fn dimension(&self) -> usize {
        1 << self.generators()
    }

    /// `e_i²` for 0-based `i`.
    pub fn square(&self, i: usize) -> f64 {
        if i < self.m {
            -1.0
        } else {
            1.0
        }
    }

    fn negative_mask(&self) -> u32 {
        ((1u64 << self.m) - 1) as u32
    }

    pub fn check_blade(&self, b: Blade) -> Result<()> {
        if (b.0 as u64) < (1u64 << self.generators()) {
            Ok(())
        } else {
            Err(Error::InvalidBlade {
                mask: b.0,
                generators: self.generators(),
            })
        }
    }

    /// All basis blades in mask order.
    pub fn blades(&self) -> impl Iterator<Item = Blade> {
        (0..self.dimension() as u32).map(Blade)
    }

    /// `a · b = sign · c` with `c = a ⊕ b`.
    ///
    /// The sign collects one factor −1 per transposition needed to sort the
    /// concatenated generator list, and the square of every generator
    /// present in both blades.
    pub fn blade_mul(&self, a: Blade, b: Blade) -> Result<(f64, Blade)> {
        self.check_blade(a)?;
        self.check_blade(b)?;
        Ok(self.blade_mul_unchecked(a, b))
    }

    pub(crate) fn blade_mul_unchecked(&self, a: Blade, b: Blade) -> (f64, Blade) {
        let mut swaps = 0u32;
        let mut shifted = a.0 >> 1;
        while shifted != 0 {
            swaps += (shifted & b.0).count_ones();
            shifted >>= 1;
        }
        let negative_squares = (a.0 & b.0 & self.negative_mask()).count_ones();
        let sign = if (swaps + negative_squares).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        (sign, Blade(a.0 ^ b.0))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.m, self.l)
    }
}

/// Ordered product `e_{i₁} e_{i₂} ⋯ e_{i_k}` with `i₁ < i₂ < … < i_k`;
/// bit `i` stands for `e_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Single generator, 0-based.
    pub fn generator(i: usize) -> Blade {
        Blade(1 << i)
    }

    /// Blade from 0-based generator indices; repeats cancel pairwise.
    pub fn from_indices(indices: &[usize]) -> Blade {
        Blade(indices.iter().fold(0, |acc, &i| acc ^ (1 << i)))
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_even(&self) -> bool {
        self.grade().is_multiple_of(2)
    }

    /// 0-based generator indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|i| self.0 >> i & 1 == 1).collect()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for i in self.indices() {
            write!(f, "e{}", i + 1)?;
        }
        Ok(())
    }
}
