//! Complex scalar helpers and the `a+bi` text form used on the command line.
//!
//! Values print with Rust's shortest round-trip float formatting, so a printed
//! value parses back to the identical `f64` pair.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// A complex number with a lossless textual form `a+bi` / `a-bi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexValue(pub Complex64);

impl ComplexValue {
    pub fn new(re: f64, im: f64) -> Self {
        Self(Complex64::new(re, im))
    }
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self(z)
    }
}

impl From<ComplexValue> for Complex64 {
    fn from(z: ComplexValue) -> Self {
        z.0
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Complex64 { re, im } = self.0;
        let sign = if im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{}i", real_text(re), real_text(im.abs()))
    }
}

/// Shortest round-trip form, switching to an exponent for very large or
/// small magnitudes; integral values drop the trailing `.0`.
fn real_text(x: f64) -> String {
    let s = format!("{x:?}");
    match s.strip_suffix(".0") {
        Some(t) => t.to_string(),
        None => s,
    }
}

impl FromStr for ComplexValue {
    type Err = Error;

    /// Accepts `[-]x[(+|-)yi]` where `x`, `y` are decimal literals (an exponent
    /// suffix such as `1e-3` is also accepted). A bare `yi` is read as purely
    /// imaginary.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(fail("empty input"));
        }
        let bytes = t.as_bytes();
        // Split at the last sign that is neither leading nor part of an exponent.
        let split = (1..bytes.len())
            .rev()
            .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
        let (re_part, im_part) = match split {
            Some(k) => (&t[..k], Some(&t[k..])),
            None if t.ends_with('i') => ("", Some(t)),
            None => (t, None),
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            parse_real(re_part).ok_or_else(|| fail("malformed real part"))?
        };
        let im = match im_part {
            None => 0.0,
            Some(p) => {
                let body = p
                    .strip_suffix('i')
                    .ok_or_else(|| fail("imaginary part must end in 'i'"))?;
                let body = match body {
                    "+" | "" => "1",
                    "-" => "-1",
                    b => b,
                };
                parse_real(body).ok_or_else(|| fail("malformed imaginary part"))?
            }
        };
        Ok(Self::new(re, im))
    }
}

fn parse_real(s: &str) -> Option<f64> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if !digits.starts_with(|c: char| c.is_ascii_digit() || c == '.') {
        return None;
    }
    if !digits
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
    {
        return None;
    }
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Error unless both components are finite.
pub(crate) fn ensure_finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Range(format!("{what} is not finite")))
    }
}

/// `i^k` for any integer exponent, read off a table indexed by `k mod 4`.
pub fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `e^{iλ}` and `e^{-iλ}`, or a range error when either overflows.
pub(crate) fn exp_pair(lambda: Complex64) -> Result<(Complex64, Complex64)> {
    if lambda.im.abs() > 700.0 {
        return Err(Error::Range(format!("|Im λ| = {} overflows e^(±iλ)", lambda.im.abs())));
    }
    Ok(((I * lambda).exp(), (-I * lambda).exp()))
}

/// Relative difference `|a - b| / max(|a|, |b|)`; zero when both vanish.
pub fn rel_diff(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}
