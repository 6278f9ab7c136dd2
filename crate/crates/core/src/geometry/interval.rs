use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::rational::{format_decimal, format_decimal_floor, Rational};

/// Closed interval `[lo, hi]` with rational (dyadic in practice) endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        if k.is_negative() {
            Interval { lo: &self.hi * k, hi: &self.lo * k }
        } else {
            Interval { lo: &self.lo * k, hi: &self.hi * k }
        }
    }

    /// Enclosure of `sqrt(n)` with width at most `2^-bits`.
    pub fn sqrt_uint(n: &BigUint, bits: u32) -> Interval {
        let shifted = n << (2 * bits as usize);
        let root = shifted.sqrt();
        let den = BigInt::one() << bits as usize;
        let lo = Rational::new(BigInt::from(root.clone()), den.clone());
        if &root * &root == shifted {
            return Interval::point(lo);
        }
        let hi = Rational::new(BigInt::from(root + 1u32), den);
        Interval { lo, hi }
    }

    /// Enclosure of `sqrt(r)` for `r >= 0` with width at most `2^-bits`.
    pub fn sqrt_rational(r: &Rational, bits: u32) -> Interval {
        assert!(!r.is_negative(), "square root of a negative rational");
        if r.is_zero() {
            return Interval::point(Rational::zero());
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let q = r.denom().magnitude().clone();
        let n = r.numer().magnitude() * &q;
        let extra = q.bits() as u32;
        let inner = Interval::sqrt_uint(&n, bits + extra);
        inner.scale(&Rational::new(BigInt::one(), BigInt::from(q)))
    }

    /// Decimal rendering `[lo, hi]`, outward-rounded.
    pub fn to_decimal(&self, digits: u32) -> String {
        let hi_neg = -&self.hi;
        let hi = format_decimal_floor(&hi_neg, digits);
        let hi = match hi.strip_prefix('-') {
            Some(s) => s.to_string(),
            None if hi.chars().all(|c| c == '0' || c == '.') => hi,
            None => format!("-{hi}"),
        };
        format!("[{}, {}]", format_decimal_floor(&self.lo, digits), hi)
    }

    pub fn midpoint_decimal(&self, digits: u32) -> String {
        format_decimal(&self.midpoint(), digits)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(12))
    }
}
