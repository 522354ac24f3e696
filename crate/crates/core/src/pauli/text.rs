// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Text form of [`CliffordElement`].
//!
//! ```text
//! element := sign? term (sign term)*
//! term    := coeff? '*'? LETTERS
//! coeff   := real | real 'i' | 'i' | '(' complex ')'
//! LETTERS := [IXYZ]+            (first letter is qubit n-1)
//! ```
//!
//! Repeated strings are summed. In [`Precision::Shortest`] a coefficient of
//! ±1 (or ±i) is written implicitly; [`Precision::Full`] always prints it.
//! The zero element prints as `0 I…I`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::literal::{format_real, parse_complex, parse_real};
use crate::pauli::{CliffordElement, Letter, PauliString};

/// Number rendering used by [`CliffordElement::format_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    /// Shortest text that reads back to the same `f64`.
    #[default]
    Shortest,
    /// 17 significant digits, unit coefficients included.
    Full,
}

fn render(x: f64, precision: Precision) -> String {
    match precision {
        Precision::Full => format_real(x),
        Precision::Shortest => {
            let s = format!("{x:?}");
            s.strip_suffix(".0").map(str::to_owned).unwrap_or(s)
        }
    }
}

impl CliffordElement {
    pub fn format_with(&self, precision: Precision) -> String {
        if self.is_zero() {
            return format!("0 {}", "I".repeat(self.n()));
        }
        let implicit_unit = precision == Precision::Shortest;
        let mut out = String::new();
        for (k, (p, c)) in self.terms().enumerate() {
            let letters = p.letters_string();
            let (negative, body) = if c.im == 0.0 {
                let mag = c.re.abs();
                let body = if mag == 1.0 && implicit_unit {
                    letters
                } else {
                    format!("{} {letters}", render(mag, precision))
                };
                (c.re < 0.0, body)
            } else if c.re == 0.0 {
                let mag = c.im.abs();
                let coeff = if mag == 1.0 && implicit_unit {
                    "i".to_owned()
                } else {
                    format!("{}i", render(mag, precision))
                };
                (c.im < 0.0, format!("{coeff} {letters}"))
            } else {
                let sign = if c.im < 0.0 { '-' } else { '+' };
                let body = format!(
                    "({}{sign}{}i) {letters}",
                    render(c.re, precision),
                    render(c.im.abs(), precision)
                );
                (false, body)
            };
            match (k, negative) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(Precision::Shortest))
    }
}

impl FromStr for CliffordElement {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let terms = Parser::new(text).parse()?;
        let n = terms[0].0.len();
        let mut strings = Vec::with_capacity(terms.len());
        for (letters, c) in terms {
            if letters.len() != n {
                return Err(Error::Parse(format!(
                    "string lengths differ: {} vs {n}",
                    letters.len()
                )));
            }
            strings.push((PauliString::from_letters(&letters)?, c));
        }
        CliffordElement::from_terms(n, strings)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn sign(&mut self) -> Option<f64> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(1.0)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(-1.0)
            }
            _ => None,
        }
    }

    fn parse(mut self) -> Result<Vec<(Vec<Letter>, Complex64)>> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut sign = self.sign().unwrap_or(1.0);
        loop {
            self.skip_ws();
            let (letters, c) = self.term()?;
            terms.push((letters, c * sign));
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            sign = self.sign().ok_or_else(|| self.err("expected `+` or `-`"))?;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Vec<Letter>, Complex64)> {
        let coeff = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let start = self.pos;
                while self.peek().is_some_and(|c| c != ')') {
                    self.pos += 1;
                }
                if self.peek() != Some(')') {
                    return Err(self.err("unclosed `(`"));
                }
                let inner: String = self.chars[start..self.pos].iter().collect();
                self.pos += 1;
                parse_complex(&inner)?
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number()?,
            Some('i') => {
                self.pos += 1;
                Complex64::new(0.0, 1.0)
            }
            _ => Complex64::new(1.0, 0.0),
        };
        self.skip_ws();
        if self.peek() == Some('*') {
            self.pos += 1;
            self.skip_ws();
        }
        let mut letters = Vec::new();
        while let Some(l) = self.peek().and_then(Letter::from_char) {
            letters.push(l);
            self.pos += 1;
        }
        if letters.is_empty() {
            return Err(self.err("expected Pauli letters"));
        }
        Ok((letters, coeff))
    }

    fn number(&mut self) -> Result<Complex64> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            let exponent_sign = matches!(c, '+' | '-')
                && self.pos > start
                && matches!(self.chars[self.pos - 1], 'e' | 'E');
            if c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E') || exponent_sign {
                self.pos += 1;
            } else {
                break;
            }
        }
        let literal: String = self.chars[start..self.pos].iter().collect();
        let value = parse_real(&literal)?;
        if self.peek() == Some('i') {
            self.pos += 1;
            Ok(Complex64::new(0.0, value))
        } else {
            Ok(Complex64::new(value, 0.0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

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

    #[test]
    fn grammar_examples() {
        let e: CliffordElement = "XI + 2i ZZ".parse().unwrap();
        assert_eq!(e.n(), 2);
        assert_eq!(e.len(), 2);
        assert_eq!(e.coefficient(&s("XI")), c(1.0, 0.0));
        assert_eq!(e.coefficient(&s("ZZ")), c(0.0, 2.0));

        let id: CliffordElement = "II".parse().unwrap();
        assert_eq!(id, CliffordElement::identity(2).unwrap());

        let e: CliffordElement = "-0.5*XY + (1-2i) ZZ − iYI + 1e-3 II".parse().unwrap();
        assert_eq!(e.coefficient(&s("XY")), c(-0.5, 0.0));
        assert_eq!(e.coefficient(&s("ZZ")), c(1.0, -2.0));
        assert_eq!(e.coefficient(&s("YI")), c(0.0, -1.0));
        assert_eq!(e.coefficient(&s("II")), c(1e-3, 0.0));
    }

    #[test]
    fn duplicates_are_summed() {
        let e: CliffordElement = "X + X - Z + Z".parse().unwrap();
        assert_eq!(e, "2 X".parse().unwrap());
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "", "X +", "2", "XA", "X Y", "(1+2i X", "XX + Z", "2 * ", "X ++ Z", "1.2.3 X",
        ] {
            assert!(bad.parse::<CliffordElement>().is_err(), "accepted `{bad}`");
        }
    }

    #[test]
    fn formatting() {
        let e: CliffordElement = "XI + 2i ZZ - 0.5 YY - i IX + (1-2i) ZX".parse().unwrap();
        assert_eq!(e.to_string(), "-i IX + XI + (1-2i) ZX + 2i ZZ - 0.5 YY");
        assert_eq!(CliffordElement::zero(3).unwrap().to_string(), "0 III");
        let zero: CliffordElement = "0 III".parse().unwrap();
        assert!(zero.is_zero() && zero.n() == 3);
        let h: CliffordElement = "X + Z".parse().unwrap();
        let h = h.scale(c(std::f64::consts::FRAC_1_SQRT_2, 0.0));
        assert_eq!(
            h.format_with(Precision::Full),
            "0.70710678118654757 X + 0.70710678118654757 Z"
        );
        assert_eq!(
            e.format_with(Precision::Full),
            "-1i IX + 1 XI + (1-2i) ZX + 2i ZZ - 0.5 YY"
        );
    }

    fn coefficient() -> impl Strategy<Value = Complex64> {
        let part = prop_oneof![
            Just(0.0),
            Just(1.0),
            Just(-1.0),
            -1e6..1e6f64,
            any::<f64>().prop_filter("finite", |v| v.is_finite()),
        ];
        (part.clone(), part).prop_map(|(re, im)| Complex64::new(re, im))
    }

    fn element() -> impl Strategy<Value = CliffordElement> {
        (1usize..=4).prop_flat_map(|n| {
            let side = 1u64 << n;
            prop::collection::vec((0..side, 0..side, 0u8..4, coefficient()), 0..8).prop_map(
                move |terms| {
                    CliffordElement::from_terms(
                        n,
                        terms
                            .into_iter()
                            .map(|(x, z, ph, c)| (PauliString::new(n, x, z, ph).unwrap(), c)),
                    )
                    .unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn text_round_trip(e in element()) {
            for precision in [Precision::Shortest, Precision::Full] {
                let back: CliffordElement = e.format_with(precision).parse().unwrap();
                prop_assert_eq!(&back, &e);
                let again: CliffordElement = back.format_with(precision).parse().unwrap();
                prop_assert_eq!(&again, &e);
            }
        }
    }
}
