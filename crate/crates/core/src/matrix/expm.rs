// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::dense::DenseMatrix;
use crate::matrix::to_matrix;
use crate::pauli::CliffordElement;

/// The gate `U = exp(iH)` for `H = Σ c_I g_I` with real `c_I`.
///
/// Uses the Hermitian eigendecomposition `H = V Λ V†`, so
/// `U = V e^{iΛ} V†`. Any non-zero imaginary part is rejected: such an `H`
/// is not Hermitian and `U` would not be unitary.
pub fn exp_i_hermitian(h: &CliffordElement) -> Result<DenseMatrix> {
    if let Some((p, c)) = h.terms().find(|(_, c)| c.im != 0.0) {
        return Err(Error::NonRealCoefficient {
            term: p.letters_string(),
            im: c.im,
        });
    }
    exp_i_hermitian_dense(&to_matrix(h)?)
}

/// `exp(iM)` for a Hermitian dense matrix; `M` is symmetrized first, so
/// only its Hermitian part is used.
pub fn exp_i_hermitian_dense(m: &DenseMatrix) -> Result<DenseMatrix> {
    let d = m.dim();
    let hermitian = DMatrix::from_fn(d, d, |r, c| (m[(r, c)] + m[(c, r)].conj()) * 0.5);
    let eig = hermitian.symmetric_eigen();
    let v = &eig.eigenvectors;
    let phases: Vec<Complex64> = eig
        .eigenvalues
        .iter()
        .map(|&lambda| Complex64::from_polar(1.0, lambda))
        .collect();
    DenseMatrix::from_fn(d, |r, c| {
        (0..d)
            .map(|k| v[(r, k)] * phases[k] * v[(c, k)].conj())
            .sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::UNITARY_TOL;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Σ_{k<terms} (iM)^k / k!
    fn power_series(m: &DenseMatrix, terms: usize) -> DenseMatrix {
        let im = m.scale(c(0.0, 1.0));
        let mut sum = DenseMatrix::identity(m.dim()).unwrap();
        let mut power = DenseMatrix::identity(m.dim()).unwrap();
        for k in 1..terms {
            power = power.try_mul(&im).unwrap().scale(c(1.0 / k as f64, 0.0));
            sum = sum.try_add(&power).unwrap();
        }
        sum
    }

    #[test]
    fn zero_gives_identity() {
        let u = exp_i_hermitian(&CliffordElement::zero(2).unwrap()).unwrap();
        assert!(u.max_abs_diff(&DenseMatrix::identity(4).unwrap()).unwrap() < 1e-15);
    }

    #[test]
    fn rotation_about_x_closed_form() {
        for theta in [0.3, -1.2, PI] {
            let h: CliffordElement = format!("{theta} X").parse().unwrap();
            let u = exp_i_hermitian(&h).unwrap();
            let expected = DenseMatrix::from_2x2([
                [c(theta.cos(), 0.0), c(0.0, theta.sin())],
                [c(0.0, theta.sin()), c(theta.cos(), 0.0)],
            ]);
            assert!(u.max_abs_diff(&expected).unwrap() < 1e-14);
            assert!(u.is_unitary(UNITARY_TOL));
        }
        let h: CliffordElement = format!("{PI} X").parse().unwrap();
        let minus_one = DenseMatrix::identity(2).unwrap().scale(c(-1.0, 0.0));
        assert!(
            exp_i_hermitian(&h)
                .unwrap()
                .max_abs_diff(&minus_one)
                .unwrap()
                < 1e-14
        );
    }

    #[test]
    fn zz_matches_power_series() {
        let h: CliffordElement = format!("{} ZZ", PI / 4.0).parse().unwrap();
        let u = exp_i_hermitian(&h).unwrap();
        let series = power_series(&to_matrix(&h).unwrap(), 50);
        assert!(u.max_abs_diff(&series).unwrap() < 1e-10);
    }

    #[test]
    fn rejects_complex_coefficients() {
        let h: CliffordElement = "X + 0.5i Z".parse().unwrap();
        assert!(matches!(
            exp_i_hermitian(&h),
            Err(Error::NonRealCoefficient { .. })
        ));
    }

    #[test]
    fn commutes_with_generator() {
        let h: CliffordElement = "0.4 XY - 0.7 ZI + 0.2 YY + 0.1 II".parse().unwrap();
        let hm = to_matrix(&h).unwrap();
        let u = exp_i_hermitian(&h).unwrap();
        let comm = u
            .try_mul(&hm)
            .unwrap()
            .try_sub(&hm.try_mul(&u).unwrap())
            .unwrap();
        assert!(comm.max_abs_entry() < 1e-9);
    }
}
