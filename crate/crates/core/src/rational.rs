//! Exact scalar arithmetic.
//!
//! Every quantity the library computes (coroot pairings, eigenvalues,
//! volumes, degrees, slopes) is a rational number, and all of them are
//! kept exact. [`Rational`] is an arbitrary-precision fraction stored in
//! lowest terms with a positive denominator; no floating point enters any
//! computation except the explicitly numerical big-cell checks and the
//! advisory float renderings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` into a [`Rational`].
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::MalformedRational(s.to_string()))
}

/// Lossless decimal rendering, `"p"` or `"p/q"`.
///
/// Round-trips exactly through [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Advisory float of an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_positive() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True when `r` is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    is_integer(r) && !r.is_negative()
}

/// Exact sign: -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
