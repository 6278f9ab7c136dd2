//! Exact rational numbers and their text forms.
//!
//! All coordinates, areas and squared lengths in this crate are
//! [`Rational`]s. The text form is `p` or `p/q` with `q > 0`, ASCII decimal
//! digits, and an optional leading `-` on `p`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational `{0}`")]
pub struct ParseRationalError(pub String);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn parse_digits(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
}

/// Parses the strict text form. `+`, whitespace, signs on the denominator
/// and zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((p, q)) => (parse_digits(p).ok_or_else(err)?, parse_digits(q).ok_or_else(err)?),
        None => (parse_digits(body).ok_or_else(err)?, BigUint::one()),
    };
    if den.is_zero() {
        return Err(err());
    }
    let sign = if neg { Sign::Minus } else { Sign::Plus };
    Ok(Rational::new(BigInt::from_biguint(sign, num), BigInt::from(den)))
}

/// Canonical text form: lowest terms, `/q` only when `q != 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `floor(r * 10^digits)` as an integer, used by the decimal renderers.
fn scaled_floor(r: &Rational, digits: u32) -> BigInt {
    let scale = BigInt::from(10u32).pow(digits);
    (r.numer() * scale).div_floor(r.denom())
}

fn scaled_round(r: &Rational, digits: u32) -> BigInt {
    let scale = BigInt::from(10u32).pow(digits);
    let num: BigInt = r.numer() * scale * 2 + r.denom();
    num.div_floor(&(r.denom() * BigInt::from(2)))
}

fn place_point(mut digits: String, neg: bool, frac: usize) -> String {
    if frac > 0 {
        while digits.len() <= frac {
            digits.insert(0, '0');
        }
        digits.insert(digits.len() - frac, '.');
    }
    if neg {
        digits.insert(0, '-');
    }
    digits
}

/// Fixed-point decimal with `frac_digits` digits after the point, rounded
/// toward negative infinity.
pub fn format_decimal_floor(r: &Rational, frac_digits: u32) -> String {
    let v = scaled_floor(r, frac_digits);
    let neg = v.is_negative();
    place_point(v.abs().to_string(), neg, frac_digits as usize)
}

/// Fixed-point decimal rounded half-up at `frac_digits`.
pub fn format_decimal(r: &Rational, frac_digits: u32) -> String {
    let v = scaled_round(r, frac_digits);
    let neg = v.is_negative();
    place_point(v.abs().to_string(), neg, frac_digits as usize)
}

/// Decimal rendering with `sig` significant digits and trailing zeros
/// trimmed. Used only for display (SVG coordinates, report summaries).
pub fn format_significant(r: &Rational, sig: u32) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    // exponent e with 10^e <= |r| < 10^(e+1)
    let a = r.abs();
    let mut e: i64 = (a.numer().bits() as i64 - a.denom().bits() as i64) * 30103 / 100000;
    let pow = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(BigInt::from(10u32).pow(k as u32))
        } else {
            Rational::from_integer(BigInt::from(10u32).pow((-k) as u32)).recip()
        }
    };
    while pow(e) > a {
        e -= 1;
    }
    while pow(e + 1) <= a {
        e += 1;
    }
    let frac = (sig as i64 - 1 - e).max(0) as u32;
    let mut out = format_decimal(r, frac);
    if sig as i64 - 1 - e < 0 {
        // integer part longer than the significant digits: round it
        let drop = (e + 1 - sig as i64) as u32;
        let q = Rational::from_integer(BigInt::from(10u32).pow(drop));
        let rounded = scaled_round(&(r / &q), 0) * BigInt::from(10u32).pow(drop);
        out = rounded.to_string();
    }
    if out.contains('.') {
        let trimmed = out.trim_end_matches('0').trim_end_matches('.');
        out = trimmed.to_string();
    }
    if out == "-0" {
        out = "0".into();
    }
    out
}

/// Integer square root test: returns `Some(root)` when `n` is a perfect
/// square.
pub fn exact_sqrt_uint(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// `Some(sqrt(r))` when `r >= 0` is the square of a rational.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_sqrt_uint(&r.numer().magnitude().clone())?;
    let d = exact_sqrt_uint(&r.denom().magnitude().clone())?;
    Some(Rational::new(BigInt::from(n), BigInt::from(d)))
}
