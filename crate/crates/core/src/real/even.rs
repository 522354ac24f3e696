// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Even subalgebra of Cl(m, l) as a Clifford algebra with one generator
//! fewer.
//!
//! With `f = e_{m+l}` the last generator, the elements `ê_i = e_i f`
//! (`i < m+l`) anticommute pairwise and square to `−e_i² f²`. They generate
//! the even subalgebra, and the reduced signature follows from those
//! squares. The reduced generators are renumbered so that negative squares
//! come first; the relative order within each group is kept.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::real::{Blade, Multivector, Signature};

struct EvenMap {
    full: Signature,
    reduced: Signature,
    // reduced blade mask -> (sign, full even blade) with ψ(reduced) = sign·full
    to_full: Vec<(f64, Blade)>,
    to_reduced: HashMap<Blade, (f64, Blade)>,
}

/// Signature of the algebra isomorphic to the even part of `sig`.
pub fn reduced_signature(sig: Signature) -> Result<Signature> {
    let n = sig.generators();
    if n == 0 {
        return Err(Error::UnsupportedSignature {
            found: sig.to_string(),
            expected: "at least one generator",
        });
    }
    let last = sig.square(n - 1);
    let negative = (0..n - 1).filter(|&i| -sig.square(i) * last < 0.0).count();
    Signature::new(negative, n - 1 - negative)
}

impl EvenMap {
    fn new(full: Signature) -> Result<Self> {
        let reduced = reduced_signature(full)?;
        let n = full.generators();
        let last = Blade::generator(n - 1);
        let square = |i: usize| -full.square(i) * full.square(n - 1);
        // Stable partition: reduced index of each ê_i.
        let order: Vec<usize> = (0..n - 1)
            .filter(|&i| square(i) < 0.0)
            .chain((0..n - 1).filter(|&i| square(i) > 0.0))
            .collect();
        let images: Vec<Multivector> = order
            .iter()
            .map(|&i| {
                let (sign, b) = full.blade_mul_unchecked(Blade::generator(i), last);
                Multivector::blade(full, b, sign)
            })
            .collect::<Result<_>>()?;
        let mut to_full = Vec::with_capacity(reduced.dimension());
        let mut to_reduced = HashMap::with_capacity(reduced.dimension());
        for rb in reduced.blades() {
            let mut product = Multivector::one(full);
            for r in rb.indices() {
                product = product.try_mul(&images[r])?;
            }
            let (blade, sign) = product
                .terms()
                .next()
                .expect("blade image is a single term");
            to_full.push((sign, blade));
            to_reduced.insert(blade, (sign, rb));
        }
        Ok(EvenMap {
            full,
            reduced,
            to_full,
            to_reduced,
        })
    }
}

/// Image of an even element of Cl(m, l) in the reduced algebra; the
/// result carries the reduced signature.
pub fn even_iso(a: &Multivector) -> Result<Multivector> {
    if !a.is_even() {
        return Err(Error::OddGrade);
    }
    let map = EvenMap::new(a.signature())?;
    Multivector::from_terms(
        map.reduced,
        a.terms().map(|(b, v)| {
            let (sign, rb) = map.to_reduced[&b];
            (rb, sign * v)
        }),
    )
}

/// Inverse of [`even_iso`]: maps an element of `reduced_signature(full)`
/// back into the even part of `full`.
pub fn even_iso_inverse(full: Signature, b: &Multivector) -> Result<Multivector> {
    let map = EvenMap::new(full)?;
    if b.signature() != map.reduced {
        return Err(Error::SignatureMismatch {
            left: map.reduced.to_string(),
            right: b.signature().to_string(),
        });
    }
    Multivector::from_terms(
        map.full,
        b.terms().map(|(rb, v)| {
            let (sign, fb) = map.to_full[rb.0 as usize];
            (fb, sign * v)
        }),
    )
}
