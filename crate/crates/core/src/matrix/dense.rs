// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Dense matrices are capped at 2¹⁰ × 2¹⁰.
pub const MAX_DENSE_QUBITS: usize = 10;

const PARALLEL_DIM: usize = 64;

/// Row-major complex matrix whose dimension is a power of two.
#[derive(Clone, PartialEq, Debug)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

pub(crate) fn log2_dim(dim: usize) -> Result<usize> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    let k = dim.trailing_zeros() as usize;
    if k > MAX_DENSE_QUBITS {
        return Err(Error::DenseTooLarge {
            k,
            max: MAX_DENSE_QUBITS,
        });
    }
    Ok(k)
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        log2_dim(dim)?;
        Ok(DenseMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for k in 0..dim {
            m[(k, k)] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn from_fn<F>(dim: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut m = Self::zeros(dim)?;
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = f(r, c);
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: bad.len(),
            });
        }
        Self::from_fn(dim, |r, c| rows[r][c])
    }

    /// 2×2 matrix from row-major entries.
    pub fn from_2x2(entries: [[Complex64; 2]; 2]) -> Self {
        DenseMatrix {
            dim: 2,
            data: vec![entries[0][0], entries[0][1], entries[1][0], entries[1][1]],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `log2(dim)`, the number of qubits acted on.
    pub fn qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.dim..(r + 1) * self.dim]
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let d = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); d * d];
        let row_product = |(r, out_row): (usize, &mut [Complex64])| {
            for (k, &a) in self.row(r).iter().enumerate() {
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(rhs.row(k)) {
                    *o += a * b;
                }
            }
        };
        if d >= PARALLEL_DIM {
            out.par_chunks_mut(d).enumerate().for_each(row_product);
        } else {
            out.chunks_mut(d).enumerate().for_each(row_product);
        }
        Ok(DenseMatrix { dim: d, data: out })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(DenseMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(DenseMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// In-place `self += c · other`.
    pub fn add_scaled(&mut self, c: Complex64, other: &Self) -> Result<()> {
        self.check_dim(other)?;
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
        Ok(())
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for c in 0..d {
                data[c * d + r] = self[(r, c)].conj();
            }
        }
        DenseMatrix { dim: d, data }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|k| self[(k, k)]).sum()
    }

    /// Largest entry magnitude of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Block Kronecker product `a ⊗ self`: entry `(i, j)` of the 2×2 `a`
    /// scales the `(i, j)` block.
    pub fn kron_left(&self, a: &DenseMatrix) -> Result<Self> {
        a.kron(self)
    }

    /// Kronecker product `self ⊗ rhs`, `self` as the outer block index.
    pub fn kron(&self, rhs: &DenseMatrix) -> Result<Self> {
        let (da, db) = (self.dim, rhs.dim);
        let dim = da * db;
        log2_dim(dim)?;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for ar in 0..da {
            for ac in 0..da {
                let s = self[(ar, ac)];
                if s.re == 0.0 && s.im == 0.0 {
                    continue;
                }
                for br in 0..db {
                    let row = (ar * db + br) * dim + ac * db;
                    for (o, &b) in data[row..row + db].iter_mut().zip(rhs.row(br)) {
                        *o = s * b;
                    }
                }
            }
        }
        Ok(DenseMatrix { dim, data })
    }

    /// `self · v`.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        let row_dot =
            |r: usize| -> Complex64 { self.row(r).iter().zip(v).map(|(a, b)| a * b).sum() };
        Ok(if self.dim >= PARALLEL_DIM {
            (0..self.dim).into_par_iter().map(row_dot).collect()
        } else {
            (0..self.dim).map(row_dot).collect()
        })
    }

    /// Max-entry test of `M M† = I`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let prod = self.try_mul(&self.adjoint()).expect("same dimension");
        let eye = Self::identity(self.dim).expect("valid dimension");
        prod.max_abs_diff(&eye).expect("same dimension") <= tol
    }

    /// Max-entry test of `M = M†`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        (0..self.dim)
            .all(|r| (r..self.dim).all(|c| (self[(r, c)] - self[(c, r)].conj()).norm() <= tol))
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}
