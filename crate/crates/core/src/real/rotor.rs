// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::real::{Blade, Multivector, Signature};

/// Tolerance on `|Q(v)| = 1` for rotor factors.
pub const UNIT_TOL: f64 = 1e-10;

const ROTOR_TOL: f64 = 1e-9;
const GRADE_TOL: f64 = 1e-10;

/// Even element of the spin group: a product of an even number of unit
/// vectors, acting on vectors by `v ↦ r v r⁻¹`.
///
/// `r r̃` is the scalar ±1; it is +1 whenever the factors' squares pair up
/// with equal sign (always, in a definite signature).
#[derive(Debug, Clone, PartialEq)]
pub struct Rotor {
    mv: Multivector,
    norm_sign: f64,
}

/// Ordered product `v₁ v₂ ⋯ v_{2k}` of unit vectors.
pub fn rotor_from_vectors(sig: Signature, vectors: &[Vec<f64>]) -> Result<Rotor> {
    if vectors.is_empty() || !vectors.len().is_multiple_of(2) {
        return Err(Error::OddVectorCount(vectors.len()));
    }
    let mut product = Multivector::one(sig);
    for (index, coefficients) in vectors.iter().enumerate() {
        let v = Multivector::vector(sig, coefficients)?;
        let q: f64 = coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| -sig.square(i) * c * c)
            .sum();
        if (q.abs() - 1.0).abs() > UNIT_TOL {
            return Err(Error::NonUnitVector {
                index,
                norm: q.abs(),
            });
        }
        product = product.try_mul(&v)?;
    }
    Rotor::from_multivector(product)
}

impl Rotor {
    pub fn identity(sig: Signature) -> Self {
        Rotor {
            mv: Multivector::one(sig),
            norm_sign: 1.0,
        }
    }

    /// Validates an even multivector with `r r̃ = ±1`.
    pub fn from_multivector(mv: Multivector) -> Result<Self> {
        if !mv.is_even() {
            return Err(Error::InvalidRotor("odd-grade component".into()));
        }
        let norm = mv.try_mul(&mv.reverse())?;
        let s = norm.scalar_part();
        let residual = norm.try_sub(&Multivector::scalar(mv.signature(), s))?;
        if residual.max_abs_coefficient() > ROTOR_TOL || (s.abs() - 1.0).abs() > ROTOR_TOL {
            return Err(Error::InvalidRotor(format!("r r~ = {norm}")));
        }
        Ok(Rotor {
            mv,
            norm_sign: s.signum(),
        })
    }

    /// `cos(θ/2) + sin(θ/2) e_i e_j` for distinct 0-based `i`, `j`. In Cl(n, 0)
    /// this turns `e_i` towards `e_j` by `θ`.
    pub fn from_plane(sig: Signature, i: usize, j: usize, angle: f64) -> Result<Self> {
        let n = sig.generators();
        if i == j || i >= n || j >= n {
            return Err(Error::InvalidRotor(format!("plane ({i}, {j}) in {sig}")));
        }
        let (sign, plane) = sig.blade_mul(Blade::generator(i), Blade::generator(j))?;
        let half = angle / 2.0;
        let mv = Multivector::from_terms(
            sig,
            [(Blade::SCALAR, half.cos()), (plane, sign * half.sin())],
        )?;
        Self::from_multivector(mv)
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn signature(&self) -> Signature {
        self.mv.signature()
    }

    /// `r r̃`, +1 or −1.
    pub fn norm_sign(&self) -> f64 {
        self.norm_sign
    }

    pub fn inverse(&self) -> Rotor {
        Rotor {
            mv: self.mv.reverse().scale(self.norm_sign),
            norm_sign: self.norm_sign,
        }
    }

    pub fn neg(&self) -> Rotor {
        Rotor {
            mv: -&self.mv,
            norm_sign: self.norm_sign,
        }
    }

    pub fn try_mul(&self, other: &Rotor) -> Result<Rotor> {
        Ok(Rotor {
            mv: self.mv.try_mul(&other.mv)?,
            norm_sign: self.norm_sign * other.norm_sign,
        })
    }

    /// Coefficients of `r v r⁻¹`.
    pub fn rotate(&self, v: &[f64]) -> Result<Vec<f64>> {
        let vector = Multivector::vector(self.signature(), v)?;
        let image = self.mv.try_mul(&vector)?.try_mul(&self.inverse().mv)?;
        let coefficients = image.vector_part();
        let residual = image
            .terms()
            .filter(|(b, _)| b.grade() != 1)
            .map(|(_, c)| c.abs())
            .fold(0.0, f64::max);
        let scale = 1.0 + v.iter().map(|c| c.abs()).fold(0.0, f64::max);
        if residual > GRADE_TOL * scale {
            return Err(Error::NotGradeOne(residual));
        }
        Ok(coefficients)
    }

    /// Matrix whose column `k` is the image of `e_{k+1}`.
    pub fn rotation_matrix(&self) -> Result<DMatrix<f64>> {
        let n = self.signature().generators();
        let mut m = DMatrix::zeros(n, n);
        for k in 0..n {
            let mut e = vec![0.0; n];
            e[k] = 1.0;
            for (row, value) in self.rotate(&e)?.into_iter().enumerate() {
                m[(row, k)] = value;
            }
        }
        Ok(m)
    }
}
