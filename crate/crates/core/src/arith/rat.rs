//! Arbitrary-precision rationals.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps itself in lowest
//! terms with a positive denominator. This module adds the square-root and
//! parsing helpers the rest of the crate needs.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Returns `r >= 0` with `r^2 = q`, or `None` when `q` is not the square of a
/// rational. Negative input is an error.
pub fn rational_sqrt(q: &Rat) -> Result<Option<Rat>> {
    if q.is_negative() {
        return Err(Error::invalid(format!("square root of negative rational {q}")));
    }
    // Lowest terms: q is a square iff numerator and denominator both are.
    let num = int_sqrt_exact(q.numer());
    let den = int_sqrt_exact(q.denom());
    Ok(match (num, den) {
        (Some(n), Some(d)) => Some(Rat::new(n, d)),
        _ => None,
    })
}

pub fn is_rational_square(q: &Rat) -> bool {
    !q.is_negative() && matches!(rational_sqrt(q), Ok(Some(_)))
}

/// Parses `p/q` or `p`; the sign may only appear on the numerator.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::invalid(format!("malformed rational literal {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(n, true) {
        return Err(bad());
    }
    let numer: BigInt = n.parse().map_err(|_| bad())?;
    let denom: BigInt = match d {
        Some(d) if valid_int(d, false) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rat::new(numer, denom))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn fmt_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Smallest integer `>= q`.
pub fn ceil_rat(q: &Rat) -> BigInt {
    q.ceil().to_integer()
}
