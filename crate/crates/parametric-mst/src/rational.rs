//! Exact rational scalars and their textual form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::Error;

/// Arbitrary-precision rational number. Always canonical: reduced to lowest
/// terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `n / d`. Panics if `d == 0`; intended for literals in code.
pub fn rational(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rational literal with zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The power of two `2^e`, for any integer exponent `e`.
pub fn pow2(e: i64) -> Rational {
    let one = BigInt::one();
    if e >= 0 {
        Rational::from_integer(one << e as usize)
    } else {
        Rational::new(one.clone(), one << (-e) as usize)
    }
}

/// Parses `"p"` or `"p/q"` with optional sign on `p`, rejecting a zero
/// denominator. The result is canonical regardless of the input form.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = |what: &str| Error::Parse(format!("{what} in rational literal {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = BigInt::from_str(num).map_err(|_| bad("bad numerator"))?;
    let den = match den {
        Some(d) => {
            if d.starts_with('+') || d.starts_with('-') {
                return Err(bad("signed denominator"));
            }
            BigInt::from_str(d).map_err(|_| bad("bad denominator"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `"p"` or `"p/q"`, the inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest integer `e` with `2^e <= x`. Panics unless `x > 0`.
pub fn floor_log2(x: &Rational) -> i64 {
    assert!(x.is_positive(), "floor_log2 of a non-positive value");
    let mut e: i64 = 0;
    let mut p = Rational::one();
    if *x >= p {
        loop {
            let next = &p * integer(2);
            if next > *x {
                return e;
            }
            p = next;
            e += 1;
        }
    }
    while p > *x {
        p /= integer(2);
        e -= 1;
    }
    e
}

/// Smallest integer `e` with `2^e >= x`. Panics unless `x > 0`.
pub fn ceil_log2(x: &Rational) -> i64 {
    let f = floor_log2(x);
    if pow2(f) == *x {
        f
    } else {
        f + 1
    }
}
