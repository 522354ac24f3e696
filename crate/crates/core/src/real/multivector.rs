// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::real::{Blade, Signature};

/// Sparse real combination of blades; exact zeros are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        let mut mv = Self::zero(sig);
        mv.accumulate(Blade::SCALAR, value);
        mv
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, 1.0)
    }

    pub fn blade(sig: Signature, blade: Blade, coefficient: f64) -> Result<Self> {
        sig.check_blade(blade)?;
        let mut mv = Self::zero(sig);
        mv.accumulate(blade, coefficient);
        Ok(mv)
    }

    /// Single generator `e_{i+1}`.
    pub fn generator(sig: Signature, i: usize) -> Result<Self> {
        Self::blade(sig, Blade::generator(i), 1.0)
    }

    /// `Σ v_i e_{i+1}`; one coefficient per generator.
    pub fn vector(sig: Signature, coefficients: &[f64]) -> Result<Self> {
        if coefficients.len() != sig.generators() {
            return Err(Error::VectorLength {
                found: coefficients.len(),
                expected: sig.generators(),
            });
        }
        let mut mv = Self::zero(sig);
        for (i, &v) in coefficients.iter().enumerate() {
            mv.accumulate(Blade::generator(i), v);
        }
        Ok(mv)
    }

    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, f64)>,
    {
        let mut mv = Self::zero(sig);
        for (b, v) in terms {
            sig.check_blade(b)?;
            mv.accumulate(b, v);
        }
        Ok(mv)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.terms.iter().map(|(&b, &v)| (b, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    pub fn scalar_part(&self) -> f64 {
        self.coefficient(Blade::SCALAR)
    }

    /// Coefficients of `e_1 … e_{m+l}`.
    pub fn vector_part(&self) -> Vec<f64> {
        (0..self.sig.generators())
            .map(|i| self.coefficient(Blade::generator(i)))
            .collect()
    }

    pub fn grade_part(&self, grade: u32) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == grade)
                .map(|(&b, &v)| (b, v))
                .collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(Blade::is_even)
    }

    fn accumulate(&mut self, blade: Blade, value: f64) {
        if value == 0.0 {
            return;
        }
        match self.terms.entry(blade) {
            Entry::Vacant(e) => {
                e.insert(value);
            }
            Entry::Occupied(mut e) => {
                let sum = *e.get() + value;
                if sum == 0.0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (&b, &v) in &other.terms {
            out.accumulate(b, v);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (&b, &v) in &other.terms {
            out.accumulate(b, -v);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Self::zero(self.sig);
        for (&a, &va) in &self.terms {
            for (&b, &vb) in &other.terms {
                let (sign, c) = self.sig.blade_mul_unchecked(a, b);
                out.accumulate(c, sign * va * vb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = Self::zero(self.sig);
        for (&b, &v) in &self.terms {
            out.accumulate(b, s * v);
        }
        out
    }

    /// Reverses the generator order of every blade: grade `k` picks up
    /// `(−1)^{k(k−1)/2}`.
    pub fn reverse(&self) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(&b, &v)| {
                    let k = b.grade();
                    let flip = (k * k.saturating_sub(1) / 2) % 2 == 1;
                    (b, if flip { -v } else { v })
                })
                .collect(),
        }
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.terms.values().map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.try_sub(other)?.max_abs_coefficient())
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, v)) in self.terms().enumerate() {
            let sign = if v < 0.0 { "-" } else { "+" };
            match k {
                0 if v < 0.0 => f.write_str("-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            if b == Blade::SCALAR {
                write!(f, "{}", v.abs())?;
            } else {
                write!(f, "{}*{b}", v.abs())?;
            }
        }
        Ok(())
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("signatures differ")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("signatures differ")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        self.try_mul(rhs).expect("signatures differ")
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Signature {
        Signature::quaternion()
    }

    #[test]
    fn quaternion_relations() {
        let one = Multivector::one(q());
        let i1 = Multivector::generator(q(), 0).unwrap();
        let i2 = Multivector::generator(q(), 1).unwrap();
        let i3 = &i1 * &i2;
        assert_eq!(&i1 * &i1, -&one);
        assert_eq!(&i2 * &i2, -&one);
        assert_eq!(&i3 * &i3, -&one);
        assert_eq!(&i2 * &i1, -&i3);
        assert_eq!(&i1 * &i3, -&i2);
        assert_eq!(&i3 * &i1, i2);
        assert_eq!(&i2 * &i3, i1);
        assert_eq!(&i3 * &i2, -&i1);
    }

    #[test]
    fn reverse_cases() {
        let s = Multivector::scalar(q(), 2.5);
        assert_eq!(s.reverse(), s);
        let e12 = Multivector::blade(q(), Blade(0b11), 1.0).unwrap();
        assert_eq!(e12.reverse(), -&e12);
        let sig = Signature::new(2, 2).unwrap();
        let a = Multivector::from_terms(sig, sig.blades().map(|b| (b, b.0 as f64 + 1.0))).unwrap();
        assert_eq!(a.reverse().reverse(), a);
        for b in sig.blades() {
            let expected = match b.grade() % 4 {
                2 | 3 => -a.coefficient(b),
                _ => a.coefficient(b),
            };
            assert_eq!(a.reverse().coefficient(b), expected);
        }
    }

    #[test]
    fn reverse_is_an_anti_automorphism() {
        let sig = Signature::new(1, 2).unwrap();
        let a = Multivector::from_terms(sig, sig.blades().map(|b| (b, 0.5 + b.0 as f64))).unwrap();
        let b = Multivector::from_terms(sig, sig.blades().map(|b| (b, 1.0 - 0.25 * b.0 as f64)))
            .unwrap();
        assert_eq!((&a * &b).reverse(), &b.reverse() * &a.reverse());
    }

    #[test]
    fn signature_mismatch() {
        let a = Multivector::one(q());
        let b = Multivector::one(Signature::new(0, 2).unwrap());
        assert!(matches!(
            a.try_mul(&b),
            Err(Error::SignatureMismatch { .. })
        ));
        assert!(Multivector::vector(q(), &[1.0]).is_err());
        assert!(Multivector::blade(q(), Blade(4), 1.0).is_err());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = Multivector::vector(q(), &[1.0, 2.0]).unwrap();
        assert!((&a - &a).is_zero());
        assert_eq!(a.to_string(), "1*e1 + 2*e2");
    }
}
