//! Exact sums of square roots.
//!
//! A [`LengthExpr`] is `sum c_i * sqrt(n_i)` with rational coefficients and
//! positive integer radicands. Expressions are kept in a canonical form in
//! which no two radicands differ by a rational square factor; the square
//! roots of such radicands are linearly independent over the rationals, so
//! an expression is zero exactly when it has no terms. Strict ordering is
//! decided by interval refinement with doubling precision.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::interval::Interval;
use crate::rational::{exact_sqrt_uint, format_rational, Rational};

/// Starting precision of the refinement loop.
pub const INITIAL_PRECISION_BITS: u32 = 64;
/// Default cap of the refinement loop.
pub const DEFAULT_PRECISION_CAP_BITS: u32 = 4096;

const SMALL_PRIME_BOUND: u32 = 1000;
/// Number of small primes used for the quadratic-character fingerprint.
const CHARACTER_PRIMES: usize = 48;
/// Beyond this many radicals the conjugate norm is not expanded.
pub const NORM_RADICAL_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LengthError {
    #[error("sign undecided after {0} bits although the difference is nonzero")]
    PrecisionExhausted(u32),
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = SMALL_PRIME_BOUND as usize;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < n {
            if sieve[i] {
                let mut j = i * i;
                while j < n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

/// Reduced radicand: `n = square^2 * small * cofactor` where `small` is a
/// squarefree product of primes below the trial bound and `cofactor` has no
/// such prime factor (and is not a perfect square unless it is 1).
struct Reduced {
    square: BigUint,
    small: BigUint,
    cofactor: BigUint,
}

fn reduce(n: &BigUint) -> Reduced {
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut small = BigUint::one();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let bp = BigUint::from(p);
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            square *= bp.pow(e / 2);
            if e % 2 == 1 {
                small *= p;
            }
        }
    }
    if let Some(root) = exact_sqrt_uint(&rest) {
        square *= root;
        rest = BigUint::one();
    }
    Reduced { square, small, cofactor: rest }
}

/// Quadratic characters of the cofactor modulo the first few small primes.
/// Cofactors in the same square class share every character because they are
/// coprime to those primes.
fn character_bits(cofactor: &BigUint) -> u64 {
    if cofactor.is_one() {
        return 0;
    }
    let mut bits = 0u64;
    for (i, &p) in small_primes().iter().skip(1).take(CHARACTER_PRIMES).enumerate() {
        let r = (cofactor % p).to_u64().unwrap();
        let e = (p as u64 - 1) / 2;
        let mut acc = 1u64;
        let mut base = r;
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            k >>= 1;
        }
        if acc != 1 {
            bits |= 1 << i;
        }
    }
    bits
}

/// Exact real number of the form `sum c_i * sqrt(n_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LengthExpr {
    terms: BTreeMap<BigUint, Rational>,
}

impl LengthExpr {
    pub fn zero() -> Self {
        LengthExpr::default()
    }

    pub fn rational(r: Rational) -> Self {
        LengthExpr::from_terms([(r, Rational::one())])
    }

    pub fn from_int(n: i64) -> Self {
        LengthExpr::rational(crate::rational::int(n))
    }

    /// `sqrt(r)` for `r >= 0`.
    pub fn sqrt(r: &Rational) -> Self {
        LengthExpr::from_terms([(Rational::one(), r.clone())])
    }

    /// Builds `sum coeff * sqrt(radicand)` and canonicalizes once. Panics on
    /// negative radicands; use [`LengthExpr::try_from_terms`] to handle them.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        Self::try_from_terms(terms).expect("negative radicand")
    }

    pub fn try_from_terms<I>(terms: I) -> Result<Self, LengthError>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        // integer radicand -> coefficient, merging exact duplicates first
        let mut raw: HashMap<BigUint, Rational> = HashMap::new();
        for (c, r) in terms {
            if r.is_negative() {
                return Err(LengthError::NegativeRadicand(format_rational(&r)));
            }
            if c.is_zero() || r.is_zero() {
                continue;
            }
            let q = r.denom().magnitude().clone();
            let n = r.numer().magnitude() * &q;
            let c = c / Rational::from_integer(BigInt::from(q));
            *raw.entry(n).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::canonicalize(raw))
    }

    fn canonicalize(raw: HashMap<BigUint, Rational>) -> Self {
        // Bucket by (small squarefree part, characters of the cofactor); only
        // radicands within a bucket can be in the same square class.
        struct Cluster {
            rep: BigUint,
            min: BigUint,
            coeff: Rational,
        }
        let mut buckets: HashMap<(BigUint, u64), Vec<Cluster>> = HashMap::new();
        for (n, c) in raw {
            if c.is_zero() {
                continue;
            }
            let red = reduce(&n);
            let c = c * Rational::from_integer(BigInt::from(red.square));
            let key = (red.small.clone(), character_bits(&red.cofactor));
            let clusters = buckets.entry(key).or_default();
            let mut merged = false;
            for cl in clusters.iter_mut() {
                if cl.rep == red.cofactor {
                    cl.coeff += &c;
                    merged = true;
                    break;
                }
                let prod = &cl.rep * &red.cofactor;
                if let Some(root) = exact_sqrt_uint(&prod) {
                    // sqrt(s*cof) = root/rep * sqrt(s*rep)
                    let k = Rational::new(BigInt::from(root), BigInt::from(cl.rep.clone()));
                    cl.coeff += &c * k;
                    if red.cofactor < cl.min {
                        cl.min = red.cofactor.clone();
                    }
                    merged = true;
                    break;
                }
            }
            if !merged {
                clusters.push(Cluster { rep: red.cofactor.clone(), min: red.cofactor, coeff: c });
            }
        }
        let mut terms = BTreeMap::new();
        for (key, clusters) in buckets {
            let small = key.0;
            for mut cl in clusters {
                if cl.coeff.is_zero() {
                    continue;
                }
                if cl.min != cl.rep {
                    let root = exact_sqrt_uint(&(&cl.rep * &cl.min)).expect("same square class");
                    cl.coeff *= Rational::new(BigInt::from(root), BigInt::from(cl.min.clone()));
                }
                terms.insert(&small * &cl.min, cl.coeff);
            }
        }
        LengthExpr { terms }
    }

    /// The representative radicand of each class is the smallest reduced
    /// radicand, so the canonical form does not depend on insertion order.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn radical_count(&self) -> usize {
        self.terms.keys().filter(|n| !n.is_one()).count()
    }

    /// The rational value, when the expression has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return LengthExpr::zero();
        }
        LengthExpr { terms: self.terms.iter().map(|(n, c)| (n.clone(), c * k)).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&crate::rational::int(k))
    }

    /// Sum of many expressions with a single canonicalization pass.
    pub fn sum<'a, I>(items: I) -> Self
    where
        I: IntoIterator<Item = &'a LengthExpr>,
    {
        let mut raw: HashMap<BigUint, Rational> = HashMap::new();
        for e in items {
            for (n, c) in &e.terms {
                *raw.entry(n.clone()).or_insert_with(Rational::zero) += c;
            }
        }
        Self::canonicalize(raw)
    }

    /// Enclosure with width at most `(sum |c_i|) * 2^-bits`.
    pub fn enclose(&self, bits: u32) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for (n, c) in &self.terms {
            let term = if n.is_one() { Interval::point(c.clone()) } else { Interval::sqrt_uint(n, bits).scale(c) };
            acc = acc.add(&term);
        }
        acc
    }

    /// Enclosure whose width is at most `2^-bits` in absolute terms.
    pub fn enclose_abs(&self, bits: u32) -> Interval {
        let weight: Rational = self.terms.values().map(|c| c.abs()).sum();
        let extra = if weight > Rational::one() { (weight.to_integer().bits() + 1) as u32 } else { 0 };
        self.enclose(bits + extra)
    }

    /// Sign of the value with a precision cap.
    pub fn signum_with_cap(&self, cap_bits: u32) -> Result<Ordering, LengthError> {
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        if let Some(r) = self.as_rational() {
            return Ok(r.cmp(&Rational::zero()));
        }
        let mut bits = INITIAL_PRECISION_BITS.min(cap_bits);
        loop {
            let i = self.enclose(bits);
            if i.lo.is_positive() {
                return Ok(Ordering::Greater);
            }
            if i.hi.is_negative() {
                return Ok(Ordering::Less);
            }
            if bits >= cap_bits {
                return Err(LengthError::PrecisionExhausted(bits));
            }
            bits = (bits * 2).min(cap_bits);
        }
    }

    pub fn signum(&self) -> Ordering {
        self.signum_with_cap(DEFAULT_PRECISION_CAP_BITS).expect("length comparison exceeded its precision cap")
    }

    /// Product of all sign conjugates (each radical negated independently).
    /// It is a rational number, zero exactly when the expression is zero.
    /// Returns `None` beyond [`NORM_RADICAL_LIMIT`] radicals.
    pub fn conjugate_norm(&self) -> Option<Rational> {
        let radicals: Vec<&BigUint> = self.terms.keys().filter(|n| !n.is_one()).collect();
        if radicals.len() > NORM_RADICAL_LIMIT {
            return None;
        }
        let radicands: Vec<Rational> =
            radicals.iter().map(|n| Rational::from_integer(BigInt::from((*n).clone()))).collect();
        // multilinear polynomial: subset mask -> coefficient
        let mut poly: HashMap<u32, Rational> = HashMap::new();
        for (n, c) in &self.terms {
            let mask = match radicals.iter().position(|r| *r == n) {
                Some(i) => 1u32 << i,
                None => 0,
            };
            poly.insert(mask, c.clone());
        }
        let mul = |a: &HashMap<u32, Rational>, b: &HashMap<u32, Rational>| {
            let mut out: HashMap<u32, Rational> = HashMap::new();
            for (ma, ca) in a {
                for (mb, cb) in b {
                    let mut c = ca * cb;
                    let common = ma & mb;
                    for (i, r) in radicands.iter().enumerate() {
                        if common & (1 << i) != 0 {
                            c *= r;
                        }
                    }
                    *out.entry(ma ^ mb).or_insert_with(Rational::zero) += c;
                }
            }
            out.retain(|_, c| !c.is_zero());
            out
        };
        for i in 0..radicals.len() {
            let bit = 1u32 << i;
            let conj: HashMap<u32, Rational> =
                poly.iter().map(|(m, c)| (*m, if m & bit != 0 { -c } else { c.clone() })).collect();
            poly = mul(&poly, &conj);
        }
        Some(poly.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    /// Decimal approximation of the value, for display only.
    pub fn approx_decimal(&self, digits: u32) -> String {
        let bits = digits * 4 + 16;
        self.enclose_abs(bits).midpoint_decimal(digits)
    }
}

impl Add for &LengthExpr {
    type Output = LengthExpr;
    fn add(self, rhs: &LengthExpr) -> LengthExpr {
        LengthExpr::sum([self, rhs])
    }
}

impl Sub for &LengthExpr {
    type Output = LengthExpr;
    fn sub(self, rhs: &LengthExpr) -> LengthExpr {
        let neg = -rhs;
        LengthExpr::sum([self, &neg])
    }
}

impl Neg for &LengthExpr {
    type Output = LengthExpr;
    fn neg(self) -> LengthExpr {
        LengthExpr { terms: self.terms.iter().map(|(n, c)| (n.clone(), -c)).collect() }
    }
}

impl fmt::Display for LengthExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (n, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if n.is_one() {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "sqrt({n})")?;
            } else {
                write!(f, "{}*sqrt({n})", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

/// Exact ordering of two sums of square roots.
pub fn length_sum_compare(a: &LengthExpr, b: &LengthExpr) -> Ordering {
    (a - b).signum()
}

pub fn length_sum_compare_with_cap(a: &LengthExpr, b: &LengthExpr, cap_bits: u32) -> Result<Ordering, LengthError> {
    (a - b).signum_with_cap(cap_bits)
}
