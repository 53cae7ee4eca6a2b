//! Exact rational scalars and parsing helpers.
//!
//! All engine arithmetic runs over `Rat` (arbitrary-precision, always stored
//! reduced with positive denominator). User-facing strings accept `p/q`,
//! plain integers, and decimal literals; decimals are converted exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact fraction `p/q`. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_zero(x: &Rat) -> bool {
    x.is_zero()
}

/// Parse `p/q`, an integer, or a decimal literal into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::BadRational(s.to_string()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let p: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::BadRational(s.to_string()))?;
        let q: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::BadRational(s.to_string()))?;
        if q.is_zero() {
            return Err(Error::BadRational(s.to_string()));
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part == "-" || int_part.is_empty() {
            "0"
        } else {
            int_part
        };
        let i: BigInt = int_part
            .parse()
            .map_err(|_| Error::BadRational(s.to_string()))?;
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::BadRational(s.to_string()));
        }
        let f: BigInt = frac_part
            .parse()
            .map_err(|_| Error::BadRational(s.to_string()))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = Rat::new(f, scale);
        let int = Rat::from_integer(i);
        return Ok(if negative { int - frac } else { int + frac });
    }
    let p: BigInt = s.parse().map_err(|_| Error::BadRational(s.to_string()))?;
    Ok(Rat::from_integer(p))
}

/// Exact rational from an `f64` (every finite float is a dyadic rational).
pub fn rat_from_f64(x: f64) -> Result<Rat, Error> {
    Rat::from_float(x).ok_or(Error::BadFloat(x))
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// Rising factorial `b (b+1) ... (b+k-1)`; empty product for `k = 0`.
pub fn rising(b: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut term = b.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

pub fn is_positive(x: &Rat) -> bool {
    x.is_positive()
}
