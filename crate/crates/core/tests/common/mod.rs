// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use cliffq::real::{rotor_from_vectors, Rotor};
use cliffq::{
    CliffordElement, Complex64, DenseMatrix, Multivector, PauliString, Signature, StateVector,
};
use rand::Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_string<R: Rng>(rng: &mut R, n: usize) -> PauliString {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    PauliString::new(
        n,
        rng.gen::<u64>() & mask,
        rng.gen::<u64>() & mask,
        rng.gen_range(0..4),
    )
    .unwrap()
}

pub fn random_element<R: Rng>(rng: &mut R, n: usize, max_terms: usize) -> CliffordElement {
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            (
                random_string(rng, n),
                c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            )
        })
        .collect();
    CliffordElement::from_terms(n, terms).unwrap()
}

/// Real coefficients on phase-0 strings.
pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize, max_terms: usize) -> CliffordElement {
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            (
                random_string(rng, n).canonical(),
                c(rng.gen_range(-1.0..1.0), 0.0),
            )
        })
        .collect();
    CliffordElement::from_terms(n, terms).unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(1 << n, |_, _| {
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
    .unwrap()
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    StateVector::from_amplitudes(
        (0..1 << n)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
    .unwrap()
}

pub fn integer_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    StateVector::from_amplitudes(
        (0..1 << n)
            .map(|_| c(rng.gen_range(-5..=5) as f64, rng.gen_range(-5..=5) as f64))
            .collect(),
    )
    .unwrap()
}

pub fn random_multivector<R: Rng>(rng: &mut R, sig: Signature) -> Multivector {
    Multivector::from_terms(sig, sig.blades().map(|b| (b, rng.gen_range(-1.0..1.0)))).unwrap()
}

pub fn random_even<R: Rng>(rng: &mut R, sig: Signature) -> Multivector {
    Multivector::from_terms(
        sig,
        sig.blades()
            .filter(|b| b.is_even())
            .map(|b| (b, rng.gen_range(-1.0..1.0))),
    )
    .unwrap()
}

/// Random vector with `|Q(v)| = 1`; in an indefinite signature the
/// quadratic form sign is chosen at random among the achievable ones.
pub fn random_unit_vector<R: Rng>(rng: &mut R, sig: Signature) -> Vec<f64> {
    let n = sig.generators();
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let q: f64 = v
            .iter()
            .enumerate()
            .map(|(i, x)| -sig.square(i) * x * x)
            .sum();
        if q.abs() > 1e-2 {
            let s = q.abs().sqrt();
            return v.into_iter().map(|x| x / s).collect();
        }
    }
}

pub fn random_rotor<R: Rng>(rng: &mut R, sig: Signature, pairs: usize) -> Rotor {
    let vectors: Vec<_> = (0..2 * pairs)
        .map(|_| random_unit_vector(rng, sig))
        .collect();
    rotor_from_vectors(sig, &vectors).unwrap()
}
