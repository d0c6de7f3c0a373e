//! Exact rational scalars and their string form.
//!
//! Rationals are serialized as `"p/q"` (or just `"p"` for integers) so that
//! no interface ever carries a float.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient type used throughout the crate.
pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`; panics on `q = 0`.
pub fn ratq(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Renders `p/q` in lowest terms, omitting the denominator when it is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the exact-string form produced by [`format_rat`].
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rat::from_integer(p))
    }
}

/// `r^k` by repeated multiplication.
pub fn rat_pow(r: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= r.clone();
    }
    acc
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: u32) -> Rat {
    if k % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Renders a rational as a leading coefficient for text output: `1` and `-1`
/// collapse to `""`/`"-"` in front of a symbolic factor.
pub fn coeff_prefix(r: &Rat) -> String {
    if r.is_one() {
        String::new()
    } else if (-r.clone()).is_one() {
        "-".to_string()
    } else if r.is_negative() {
        format!("-{}*", format_rat(&-r.clone()))
    } else {
        format!("{}*", format_rat(r))
    }
}
