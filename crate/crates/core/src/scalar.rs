//! Exact scalars on the unit interval and the MV-algebra operations on them.
//!
//! [`UnitScalar`] is a reduced fraction constrained to `[0, 1]`. All of the
//! Łukasiewicz operations (`⊕`, `⊙`, `¬`) and the lattice operations (`∧`, `∨`)
//! are closed on it and computed without rounding.
//!
//! Scalar literals accepted everywhere in the crate are `p/q`, a decimal such
//! as `0.3` (read exactly as `3/10`), or a plain integer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Non-negative exact rational used by the probability semiring.
pub type Rational = BigRational;

/// Complex amplitude for the quantum model.
pub type ComplexScalar = Complex64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("empty scalar literal")]
    Empty,
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("value {0} lies outside [0,1]")]
    OutOfRange(String),
    #[error("value {0} is too large to represent")]
    Overflow(String),
}

/// An exact rational in `[0, 1]`, always stored in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitScalar(Ratio<i64>);

impl UnitScalar {
    pub const ZERO: UnitScalar = UnitScalar(Ratio::new_raw(0, 1));
    pub const ONE: UnitScalar = UnitScalar(Ratio::new_raw(1, 1));
    pub const HALF: UnitScalar = UnitScalar(Ratio::new_raw(1, 2));

    /// Builds `numerator/denominator`, reducing it. Fails when the denominator
    /// is zero or the value falls outside the unit interval.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self, LiteralError> {
        if denominator == 0 {
            return Err(LiteralError::ZeroDenominator(format!("{numerator}/0")));
        }
        Self::from_ratio(Ratio::new(numerator, denominator))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Result<Self, LiteralError> {
        if r.is_negative() || r > Ratio::one() {
            return Err(LiteralError::OutOfRange(fmt_ratio(&r)));
        }
        Ok(UnitScalar(r))
    }

    pub fn from_rational(r: &Rational) -> Result<Self, LiteralError> {
        let numer = r.numer().to_i64();
        let denom = r.denom().to_i64();
        match (numer, denom) {
            (Some(n), Some(d)) => Self::new(n, d),
            _ if r.is_negative() || *r > Rational::one() => {
                Err(LiteralError::OutOfRange(r.to_string()))
            }
            _ => Err(LiteralError::Overflow(r.to_string())),
        }
    }

    pub fn from_bool(bit: bool) -> Self {
        if bit {
            Self::ONE
        } else {
            Self::ZERO
        }
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.numer()), BigInt::from(self.denom()))
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Truncated sum `min(x + y, 1)`.
    pub fn oplus(self, other: Self) -> Self {
        let sum = self.0 + other.0;
        if sum >= Ratio::one() {
            Self::ONE
        } else {
            UnitScalar(sum)
        }
    }

    /// Łukasiewicz product `max(0, x + y - 1)`.
    pub fn odot(self, other: Self) -> Self {
        let excess = self.0 + other.0 - Ratio::one();
        if excess.is_negative() {
            Self::ZERO
        } else {
            UnitScalar(excess)
        }
    }

    pub fn wedge(self, other: Self) -> Self {
        self.min(other)
    }

    pub fn vee(self, other: Self) -> Self {
        self.max(other)
    }

    /// `1 - x`.
    pub fn neg(self) -> Self {
        UnitScalar(Ratio::one() - self.0)
    }

    /// Ordinary product; the unit interval is closed under it.
    pub fn times(self, other: Self) -> Self {
        UnitScalar(self.0 * other.0)
    }
}

fn fmt_ratio(r: &Ratio<i64>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for UnitScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_ratio(&self.0))
    }
}

impl fmt::Debug for UnitScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for UnitScalar {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = parse_rational(s)?;
        UnitScalar::from_rational(&r)
    }
}

impl Default for UnitScalar {
    fn default() -> Self {
        Self::ZERO
    }
}

/// Parses `p/q`, a decimal (`0.3`, `-1.25`, `.5`) or an integer into an exact
/// rational. No range check is applied.
pub fn parse_rational(token: &str) -> Result<Rational, LiteralError> {
    let t = token.trim();
    if t.is_empty() {
        return Err(LiteralError::Empty);
    }
    let malformed = || LiteralError::Malformed(t.to_string());
    if let Some((num, den)) = t.split_once('/') {
        let num = parse_integer(num).ok_or_else(malformed)?;
        let den = parse_integer(den).ok_or_else(malformed)?;
        if den.is_zero() {
            return Err(LiteralError::ZeroDenominator(t.to_string()));
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(malformed());
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(malformed());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| malformed())?
    };
    let denom = num_traits::pow(BigInt::from(10u32), frac_part.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Prints an exact rational as `p/q`, or as an integer when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a complex literal: `a`, `bi`, `i`, `-i`, `a+bi` or `a-bi`, where the
/// parts are rational literals or floating-point numbers.
pub fn parse_complex(token: &str) -> Result<ComplexScalar, LiteralError> {
    let t = token.trim();
    if t.is_empty() {
        return Err(LiteralError::Empty);
    }
    let malformed = || LiteralError::Malformed(t.to_string());
    let Some(body) = t.strip_suffix('i') else {
        return parse_real(t).map(|re| Complex64::new(re, 0.0));
    };
    // Split at the last sign that is not a leading sign or an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() { 0.0 } else { parse_real(re_part)? };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => parse_real(s)?,
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(malformed());
    }
    Ok(Complex64::new(re, im))
}

fn parse_real(s: &str) -> Result<f64, LiteralError> {
    match parse_rational(s) {
        Ok(r) => r.to_f64().ok_or_else(|| LiteralError::Malformed(s.to_string())),
        Err(LiteralError::ZeroDenominator(t)) => Err(LiteralError::ZeroDenominator(t)),
        Err(_) => s
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| LiteralError::Malformed(s.to_string())),
    }
}

/// Formats a real number with twelve significant digits, trimming trailing zeros.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=11).contains(&magnitude) {
        let s = format!("{x:.11e}");
        let (mantissa, exp) = s.split_once('e').unwrap_or((&s, "0"));
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = trim_zeros(&s);
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Prints a complex amplitude with twelve significant digits per component.
pub fn format_complex(z: &ComplexScalar) -> String {
    let re = format_sig12(z.re);
    let im = format_sig12(z.im);
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}
