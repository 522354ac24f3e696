// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::string::check_qubits;
use crate::pauli::{times_i_pow, PauliString};

/// Default threshold for [`CliffordElement::prune`].
pub const DEFAULT_PRUNE_TOL: f64 = 1e-14;

/// Sparse element `Σ c_I g_I` of Cl(2n, ℂ).
///
/// Keys are phase-free strings stored as `(z_mask, x_mask)`, which is also
/// the canonical term order. Exact zeros are dropped on every update;
/// floating-point residue is only removed by [`prune`](Self::prune).
#[derive(Clone, PartialEq, Debug)]
pub struct CliffordElement {
    n: usize,
    terms: BTreeMap<(u64, u64), Complex64>,
}

impl CliffordElement {
    pub fn zero(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Ok(CliffordElement {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::scalar(n, Complex64::new(1.0, 0.0))
    }

    pub fn scalar(n: usize, c: Complex64) -> Result<Self> {
        let mut e = Self::zero(n)?;
        e.accumulate(0, 0, c);
        Ok(e)
    }

    /// Sum of `coefficient · string`; the string phases are folded in.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PauliString, Complex64)>,
    {
        let mut e = Self::zero(n)?;
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::QubitMismatch {
                    left: n,
                    right: p.n(),
                });
            }
            e.accumulate(p.z_mask(), p.x_mask(), times_i_pow(c, p.phase()));
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
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

    /// Terms in canonical order as `(phase-0 string, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (PauliString, Complex64)> + '_ {
        let n = self.n;
        self.terms
            .iter()
            .map(move |(&(z, x), &c)| (PauliString::from_raw(n, x, z, 0), c))
    }

    /// Coefficient of the letters of `p` (its phase is ignored).
    pub fn coefficient(&self, p: &PauliString) -> Complex64 {
        self.terms
            .get(&(p.z_mask(), p.x_mask()))
            .copied()
            .unwrap_or_default()
    }

    fn accumulate(&mut self, z: u64, x: u64, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        match self.terms.entry((z, x)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = *o.get() + c;
                if sum.re == 0.0 && sum.im == 0.0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::QubitMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (&(z, x), &c) in &other.terms {
            out.accumulate(z, x, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (&(z, x), &c) in &other.terms {
            out.accumulate(z, x, -c);
        }
        Ok(out)
    }

    /// Distributive product; each pair of strings multiplies exactly and
    /// the resulting power of `i` is folded into the coefficient.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (&(za, xa), &ca) in &self.terms {
            let a = PauliString::from_raw(self.n, xa, za, 0);
            for (&(zb, xb), &cb) in &other.terms {
                let b = PauliString::from_raw(self.n, xb, zb, 0);
                let p = a.mul_unchecked(&b);
                out.accumulate(p.z_mask(), p.x_mask(), times_i_pow(ca * cb, p.phase()));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (&(z, x), &v) in &self.terms {
            out.accumulate(z, x, v * c);
        }
        out
    }

    /// Hermitian adjoint. Phase-free strings are self-adjoint, so only the
    /// coefficients are conjugated.
    pub fn adjoint(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(&k, &c)| (k, c.conj())).collect(),
        }
    }

    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_add(&other.try_mul(self)?)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Drops terms with `|c| <= tol`.
    pub fn prune(&self, tol: f64) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.norm() > tol)
                .map(|(&k, &c)| (k, c))
                .collect(),
        }
    }

    /// Zeroes real and imaginary parts with magnitude `<= tol`, then drops
    /// empty terms.
    pub fn chop(&self, tol: f64) -> Self {
        let clean = |v: f64| if v.abs() <= tol { 0.0 } else { v };
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (&(z, x), &c) in &self.terms {
            out.accumulate(z, x, Complex64::new(clean(c.re), clean(c.im)));
        }
        out
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.im == 0.0)
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficient magnitude of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.try_sub(other)?.max_abs_coefficient())
    }

    /// `Σ |c_I|`, an upper bound on the operator norm.
    pub fn l1_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }
}

impl From<PauliString> for CliffordElement {
    fn from(p: PauliString) -> Self {
        let mut e = CliffordElement {
            n: p.n(),
            terms: BTreeMap::new(),
        };
        e.accumulate(
            p.z_mask(),
            p.x_mask(),
            times_i_pow(Complex64::new(1.0, 0.0), p.phase()),
        );
        e
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;

    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        self.try_add(rhs).expect("qubit counts differ")
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;

    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        self.try_sub(rhs).expect("qubit counts differ")
    }
}

impl Mul for &CliffordElement {
    type Output = CliffordElement;

    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        self.try_mul(rhs).expect("qubit counts differ")
    }
}

impl Mul<&CliffordElement> for Complex64 {
    type Output = CliffordElement;

    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        rhs.scale(self)
    }
}

impl Mul<&CliffordElement> for f64 {
    type Output = CliffordElement;

    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        rhs.scale(Complex64::new(self, 0.0))
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;

    fn neg(self) -> CliffordElement {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{anticommutator, generator};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn el(text: &str) -> CliffordElement {
        text.parse().unwrap()
    }

    #[test]
    fn addition_cases() {
        let a = el("X + 2i Z");
        assert_eq!(&a + &CliffordElement::zero(1).unwrap(), a);
        assert_eq!(&el("X") + &el("X"), el("2 X"));
        assert_eq!(&el("X + Z") + &el("X - Z"), el("2 X"));
        assert_eq!((&el("X + Z") + &el("X - Z")).len(), 1);
        assert!(el("X").try_add(&el("XX")).is_err());
    }

    #[test]
    fn hadamard_squares_to_identity() {
        let h = el("X + Z").scale(c(std::f64::consts::FRAC_1_SQRT_2, 0.0));
        let sq = (&h * &h).prune(DEFAULT_PRUNE_TOL);
        assert!(
            sq.max_abs_diff(&CliffordElement::identity(1).unwrap())
                .unwrap()
                < 1e-15
        );
    }

    #[test]
    fn identity_is_neutral() {
        let a = el("0.5 XY - i ZZ + 3 II");
        let one = CliffordElement::identity(2).unwrap();
        assert_eq!(&a * &one, a);
        assert_eq!(&one * &a, a);
    }

    #[test]
    fn generator_anticommutators() {
        for n in 1..=4 {
            for i in 0..2 * n {
                for j in 0..2 * n {
                    let gi = generator(n, i).unwrap();
                    let gj = generator(n, j).unwrap();
                    let ac = anticommutator(&gi, &gj).unwrap();
                    if i == j {
                        assert_eq!(ac, CliffordElement::scalar(n, c(2.0, 0.0)).unwrap());
                    } else {
                        assert!(ac.is_zero(), "{{e{i}, e{j}}} at n={n}");
                    }
                }
            }
        }
        let x = PauliString::from_letters(&[crate::Letter::X]).unwrap();
        let y = PauliString::from_letters(&[crate::Letter::Y]).unwrap();
        assert!(anticommutator(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn adjoint_cases() {
        assert_eq!(el("i X").adjoint(), el("-i X"));
        let h = el("0.3 XZ - 1.5 YY + 2 II");
        assert_eq!(h.adjoint(), h);
        let a = el("(1+2i) XZ - i YY");
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn phased_strings_fold_into_coefficients() {
        let p = generator(1, 0)
            .unwrap()
            .mul(&generator(1, 1).unwrap())
            .unwrap();
        let e = CliffordElement::from(p);
        assert_eq!(e, el("i Z"));
    }

    #[test]
    fn prune_and_chop() {
        let e = CliffordElement::from_terms(
            1,
            [
                (
                    PauliString::from_letters(&[crate::Letter::X]).unwrap(),
                    c(1.0, 1e-16),
                ),
                (
                    PauliString::from_letters(&[crate::Letter::Z]).unwrap(),
                    c(1e-15, 0.0),
                ),
            ],
        )
        .unwrap();
        assert_eq!(e.prune(DEFAULT_PRUNE_TOL).len(), 1);
        assert_eq!(e.chop(1e-14), el("X"));
        assert!(!e.has_real_coefficients());
    }
}
