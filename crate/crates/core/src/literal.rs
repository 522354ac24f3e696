// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Numeric literals shared by the text formats.
//!
//! Reals are parsed with the standard library's correctly rounded decimal
//! conversion, so a literal maps to exactly one `f64`. Printing uses 17
//! significant digits, which is enough for every `f64` to read back
//! bit-for-bit.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Formats `x` with 17 significant digits, trailing zeros removed.
///
/// Moderate exponents print positionally (`0.70710678118654757`), others
/// in scientific form (`1.0000000000000001e-20`).
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let negative = mantissa.starts_with('-');
    let mut digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    while digits.len() > 1 && digits.ends_with('0') {
        digits.pop();
    }
    let mut out = String::with_capacity(digits.len() + 8);
    if negative {
        out.push('-');
    }
    if (-5..17).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                out.push_str(&digits);
                out.extend(std::iter::repeat_n('0', int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
            out.push_str(&digits);
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    }
    out
}

/// Formats a complex number as `a+bi` / `a-bi`, both parts always present.
pub fn format_complex(z: Complex64) -> String {
    let re = format_real(z.re);
    let im = format_real(z.im.abs());
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

/// Parses a finite decimal real literal.
pub fn parse_real(text: &str) -> Result<f64> {
    let t = text.trim();
    let valid = !t.is_empty()
        && t.chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'));
    if !valid {
        return Err(Error::Parse(format!("invalid real literal `{t}`")));
    }
    match t.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::Parse(format!("invalid real literal `{t}`"))),
    }
}

/// Parses a complex literal: `a`, `bi`, `i`, `-i`, `a+bi`, `a-bi`.
///
/// A leading unary sign belongs to the first part; the separating sign is
/// the first `+`/`-` that is neither leading nor part of an exponent.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t = text.trim();
    let bad = || Error::Parse(format!("invalid complex literal `{t}`"));
    if t.is_empty() {
        return Err(bad());
    }
    let bytes = t.as_bytes();
    let split = (1..bytes.len())
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => {
            let (re, im) = t.split_at(k);
            let im = im.strip_suffix('i').ok_or_else(bad)?;
            Ok(Complex64::new(
                parse_real(re)?,
                parse_imag_magnitude(im).ok_or_else(bad)?,
            ))
        }
        None => match t.strip_suffix('i') {
            Some(im) => Ok(Complex64::new(
                0.0,
                parse_imag_magnitude(im).ok_or_else(bad)?,
            )),
            None => Ok(Complex64::new(parse_real(t)?, 0.0)),
        },
    }
}

// The text before a trailing `i`: a signed real, or a bare sign.
fn parse_imag_magnitude(text: &str) -> Option<f64> {
    match text {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => parse_real(text).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_positional_and_scientific() {
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(-0.5), "-0.5");
        assert_eq!(
            format_real(std::f64::consts::FRAC_1_SQRT_2),
            "0.70710678118654757"
        );
        assert_eq!(format_real(123456.0), "123456");
        assert_eq!(format_real(1e-20), "9.9999999999999995e-21");
        assert_eq!(format_real(2.5e20), "2.5e20");
        assert_eq!(format_real(0.1), "0.10000000000000001");
        assert_eq!(format_real(-0.0), "-0");
    }

    #[test]
    fn parses_complex_forms() {
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(
            parse_complex("-1.5e-3-2e4i").unwrap(),
            Complex64::new(-1.5e-3, -2e4)
        );
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("3").unwrap(), Complex64::new(3.0, 0.0));
        assert_eq!(
            parse_complex("1e+2+1e-2i").unwrap(),
            Complex64::new(100.0, 0.01)
        );
        assert!(parse_complex("1+2").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("inf").is_err());
        assert!(parse_complex("").is_err());
    }

    proptest! {
        #[test]
        fn complex_literal_round_trips_bit_exact(re in any::<f64>(), im in any::<f64>()) {
            prop_assume!(re.is_finite() && im.is_finite());
            let z = parse_complex(&format_complex(Complex64::new(re, im))).unwrap();
            prop_assert_eq!(z.re.to_bits(), re.to_bits());
            prop_assert_eq!(z.im.to_bits(), im.to_bits());
        }
    }
}
