// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::dense::{DenseMatrix, MAX_DENSE_QUBITS};
use crate::pauli::{times_i_pow, CliffordElement, PauliString};

/// Expands `m` on the string basis: `c_I = tr(g_I · m) / 2ⁿ`.
///
/// For a string with masks `(x, z)`, `g[r][k]` is non-zero only at
/// `r = k ⊕ x` where it equals `i^{#Y} (-1)^{|z ∧ k|}`. The trace is then
/// `i^{#Y} Σ_k (-1)^{|z ∧ k|} m[k][k ⊕ x]`, a Walsh–Hadamard transform of
/// the `x`-shifted diagonal, so every `x` costs `O(n 2ⁿ)`.
///
/// Exact zeros are dropped; use [`CliffordElement::prune`] or
/// [`CliffordElement::chop`] for rounding residue.
pub fn decompose(m: &DenseMatrix) -> Result<CliffordElement> {
    let n = m.qubits();
    let dim = m.dim();
    if n == 0 {
        return Err(Error::QubitCount {
            n: 0,
            max: MAX_DENSE_QUBITS,
        });
    }
    let norm = 1.0 / dim as f64;
    let mut terms = Vec::with_capacity(dim);
    let mut buf = vec![Complex64::new(0.0, 0.0); dim];
    for x in 0..dim {
        for (k, slot) in buf.iter_mut().enumerate() {
            *slot = m[(k, k ^ x)];
        }
        walsh_hadamard(&mut buf);
        for (z, &sum) in buf.iter().enumerate() {
            if sum.re == 0.0 && sum.im == 0.0 {
                continue;
            }
            let y = ((x & z) as u64).count_ones() as u8;
            let p = PauliString::new(n, x as u64, z as u64, 0)?;
            terms.push((p, times_i_pow(sum * norm, y)));
        }
    }
    CliffordElement::from_terms(n, terms)
}

// Unnormalized in-place transform: out[z] = Σ_k (-1)^{|z ∧ k|} in[k].
fn walsh_hadamard(v: &mut [Complex64]) {
    let mut h = 1;
    while h < v.len() {
        for block in v.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*a + *b, *a - *b);
                *a = s;
                *b = d;
            }
        }
        h *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{string_matrix, to_matrix};
    use crate::pauli::Letter;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn s(text: &str) -> PauliString {
        let l: Vec<_> = text
            .chars()
            .map(|c| Letter::from_char(c).unwrap())
            .collect();
        PauliString::from_letters(&l).unwrap()
    }

    // Direct trace formula over explicit string matrices.
    fn trace_oracle(m: &DenseMatrix) -> CliffordElement {
        let n = m.qubits();
        let terms = PauliString::basis(n).unwrap().map(|p| {
            let g = string_matrix(&p).unwrap();
            (p, g.try_mul(m).unwrap().trace() / (m.dim() as f64))
        });
        CliffordElement::from_terms(n, terms.collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn sigma_x() {
        let e = decompose(&string_matrix(&s("X")).unwrap()).unwrap();
        assert_eq!(e, CliffordElement::from(s("X")));
    }

    #[test]
    fn hadamard() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let m = DenseMatrix::from_2x2([[c(h, 0.0), c(h, 0.0)], [c(h, 0.0), c(-h, 0.0)]]);
        let e = decompose(&m).unwrap();
        assert_eq!(e.len(), 2);
        assert!((e.coefficient(&s("X")) - c(h, 0.0)).norm() < 1e-15);
        assert!((e.coefficient(&s("Z")) - c(h, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cnot_with_control_on_the_left_factor() {
        // |l1 l2⟩ with l1 the control: flips the low bit when the high bit is set.
        let m = DenseMatrix::from_fn(4, |r, col| {
            let target = if col & 2 != 0 { col ^ 1 } else { col };
            if r == target {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        })
        .unwrap();
        let e = decompose(&m).unwrap();
        let expected: CliffordElement = "0.5 II + 0.5 IX + 0.5 ZI - 0.5 ZX".parse().unwrap();
        assert_eq!(e, expected);
        assert_eq!(trace_oracle(&m), expected);
    }

    #[test]
    fn agrees_with_trace_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=3 {
            let m = DenseMatrix::from_fn(1 << n, |_, _| {
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            })
            .unwrap();
            let fast = decompose(&m).unwrap();
            let slow = trace_oracle(&m);
            assert!(fast.max_abs_diff(&slow).unwrap() < 1e-14);
            assert!(to_matrix(&fast).unwrap().max_abs_diff(&m).unwrap() < 1e-14);
        }
    }

    #[test]
    fn orthogonality_of_string_basis() {
        let basis: Vec<_> = PauliString::basis(2).unwrap().collect();
        let mats: Vec<_> = basis.iter().map(|p| string_matrix(p).unwrap()).collect();
        for (i, a) in mats.iter().enumerate() {
            for (j, b) in mats.iter().enumerate() {
                let t = a.try_mul(b).unwrap().trace();
                let expected = if i == j { 4.0 } else { 0.0 };
                assert_eq!(t, c(expected, 0.0));
            }
        }
    }
}
