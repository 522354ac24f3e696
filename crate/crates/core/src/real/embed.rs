// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{CliffordElement, Letter, PauliString};
use crate::real::{Blade, Multivector, Signature};

/// Real 2×2 representation of Cl(0, 2) ≅ M₂(ℝ):
/// `e₁ ↦ [[0,1],[1,0]]`, `e₂ ↦ [[1,0],[0,−1]]`, `e₁e₂ ↦ [[0,−1],[1,0]]`.
pub fn matrix_rep_cl02(a: &Multivector) -> Result<Matrix2<f64>> {
    let sig = a.signature();
    if sig != Signature::new(0, 2)? {
        return Err(Error::UnsupportedSignature {
            found: sig.to_string(),
            expected: "Cl(0,2)",
        });
    }
    let e1 = Matrix2::new(0.0, 1.0, 1.0, 0.0);
    let e2 = Matrix2::new(1.0, 0.0, 0.0, -1.0);
    let image = |b: Blade| match b.0 {
        0 => Matrix2::identity(),
        1 => e1,
        2 => e2,
        _ => e1 * e2,
    };
    Ok(a.terms()
        .fold(Matrix2::zeros(), |acc, (b, v)| acc + image(b) * v))
}

/// Embeds Cl(0, 2) or Cl(2, 0) in the one-qubit Pauli algebra.
///
/// * Cl(0, 2): `e₁ ↦ σx`, `e₂ ↦ σz`, so `e₁e₂ ↦ σxσz = σy / i`.
/// * Cl(2, 0): `e₁ ↦ iσx`, `e₂ ↦ iσy`, so `e₁e₂ ↦ (iσx)(iσy) = −iσz`.
///
/// Blade images are products of the generator images, which makes the
/// map multiplicative.
pub fn embed_pauli(a: &Multivector) -> Result<CliffordElement> {
    let sig = a.signature();
    let letter = |l: Letter| PauliString::from_letters(&[l]).expect("one qubit");
    let (g1, g2) = if sig == Signature::new(0, 2)? {
        (letter(Letter::X), letter(Letter::Z))
    } else if sig == Signature::quaternion() {
        (
            letter(Letter::X).with_phase(1),
            letter(Letter::Y).with_phase(1),
        )
    } else {
        return Err(Error::UnsupportedSignature {
            found: sig.to_string(),
            expected: "Cl(0,2) or Cl(2,0)",
        });
    };
    let image = |b: Blade| -> Result<PauliString> {
        match b.0 {
            0 => PauliString::identity(1),
            1 => Ok(g1),
            2 => Ok(g2),
            _ => g1.mul(&g2),
        }
    };
    let terms = a
        .terms()
        .map(|(b, v)| Ok((image(b)?, Complex64::new(v, 0.0))))
        .collect::<Result<Vec<_>>>()?;
    CliffordElement::from_terms(1, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(sig: Signature) -> Vec<Multivector> {
        sig.blades()
            .map(|b| Multivector::blade(sig, b, 1.0).unwrap())
            .collect()
    }

    #[test]
    fn split_quaternion_matrices() {
        let sig = Signature::new(0, 2).unwrap();
        let b = basis(sig);
        assert_eq!(
            matrix_rep_cl02(&b[1]).unwrap(),
            Matrix2::new(0.0, 1.0, 1.0, 0.0)
        );
        assert_eq!(
            matrix_rep_cl02(&b[2]).unwrap(),
            Matrix2::new(1.0, 0.0, 0.0, -1.0)
        );
        assert_eq!(
            matrix_rep_cl02(&b[3]).unwrap(),
            Matrix2::new(0.0, -1.0, 1.0, 0.0)
        );
        assert!(matrix_rep_cl02(&Multivector::one(Signature::quaternion())).is_err());
    }

    #[test]
    fn matrix_rep_is_multiplicative_on_basis() {
        let b = basis(Signature::new(0, 2).unwrap());
        for x in &b {
            for y in &b {
                let lhs = matrix_rep_cl02(&(x * y)).unwrap();
                let rhs = matrix_rep_cl02(x).unwrap() * matrix_rep_cl02(y).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn embedding_images() {
        let q = basis(Signature::quaternion());
        assert_eq!(embed_pauli(&q[1]).unwrap(), "i X".parse().unwrap());
        assert_eq!(embed_pauli(&q[2]).unwrap(), "i Y".parse().unwrap());
        assert_eq!(embed_pauli(&q[3]).unwrap(), "-i Z".parse().unwrap());
        let u = basis(Signature::new(0, 2).unwrap());
        assert_eq!(embed_pauli(&u[1]).unwrap(), "X".parse().unwrap());
        assert_eq!(embed_pauli(&u[2]).unwrap(), "Z".parse().unwrap());
        assert_eq!(embed_pauli(&u[3]).unwrap(), "-i Y".parse().unwrap());
        assert!(embed_pauli(&Multivector::one(Signature::new(1, 1).unwrap())).is_err());
    }

    #[test]
    fn embeddings_are_homomorphisms() {
        for sig in [Signature::quaternion(), Signature::new(0, 2).unwrap()] {
            let b = basis(sig);
            for x in &b {
                for y in &b {
                    let lhs = embed_pauli(&(x * y)).unwrap();
                    let rhs = &embed_pauli(x).unwrap() * &embed_pauli(y).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
