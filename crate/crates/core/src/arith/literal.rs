//! The textual scalar grammar shared by the file formats and reports.
//!
//! A literal is a signed sum of terms. Each term is a rational coefficient
//! (`a` or `a/b`), a power of the root of unity (`z`, `z^k`), or a product
//! of both (`3/2*z^2`). Example: `3/2*z^2 - 1`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{CycScalar, CyclotomicField, Field, Rational};
use crate::error::{Error, Result};

pub(crate) fn format_coords(coords: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in coords.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let power = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        let magnitude = c.abs();
        let body = if k == 0 {
            magnitude.to_string()
        } else if magnitude.is_one() {
            power
        } else {
            format!("{magnitude}*{power}")
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `a` or `a/b` with an optional sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse { line: 0, column: 0, message: format!("invalid rational `{text}`") };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&den) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn parse_scalar(text: &str, field: &Arc<CyclotomicField>) -> Result<CycScalar> {
    let err = |column: usize, message: String| Error::Parse { line: 0, column, message };
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut acc = CycScalar::zero_in(field);
    let mut terms = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            break;
        }
        let mut negative = false;
        if chars[pos] == '+' || chars[pos] == '-' {
            negative = chars[pos] == '-';
            pos += 1;
            skip_ws(&mut pos);
        } else if terms > 0 {
            return Err(err(pos + 1, format!("expected `+` or `-` in scalar `{text}`")));
        }
        let mut coeff = Rational::one();
        let mut saw_coeff = false;
        let start = pos;
        while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
            pos += 1;
        }
        if pos > start {
            let literal: String = chars[start..pos].iter().collect();
            coeff = parse_rational(&literal).map_err(|_| err(start + 1, format!("invalid coefficient `{literal}`")))?;
            saw_coeff = true;
            skip_ws(&mut pos);
        }
        let mut exponent: Option<i64> = None;
        if saw_coeff && pos < chars.len() && chars[pos] == '*' {
            pos += 1;
            skip_ws(&mut pos);
            if pos >= chars.len() || chars[pos] != 'z' {
                return Err(err(pos + 1, format!("expected `z` after `*` in `{text}`")));
            }
        }
        if pos < chars.len() && chars[pos] == 'z' {
            pos += 1;
            exponent = Some(1);
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let estart = pos;
                if pos < chars.len() && chars[pos] == '-' {
                    pos += 1;
                }
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let e: String = chars[estart..pos].iter().collect();
                exponent = Some(e.parse().map_err(|_| err(estart + 1, format!("invalid exponent `{e}`")))?);
            }
        }
        if !saw_coeff && exponent.is_none() {
            return Err(err(pos + 1, format!("expected a term in scalar `{text}`")));
        }
        if negative {
            coeff = -coeff;
        }
        let term = match exponent {
            None => CycScalar::rational_in(field, coeff),
            Some(k) => {
                if field.order() == 1 && k != 0 {
                    // z_1 = 1, but a `z` in a rational file is almost certainly a mistake
                    return Err(err(start + 1, format!("`z` used in a rational (order 1) context: `{text}`")));
                }
                CycScalar::zeta_power(field, k).times(&CycScalar::rational(coeff))
            }
        };
        acc = acc.plus(&term);
        terms += 1;
    }
    if terms == 0 {
        return Err(err(1, "empty scalar literal".into()));
    }
    Ok(acc)
}
