//! Exact scalars and dense square matrices over Q and Z.
//!
//! Everything here is exact. Determinants use fraction-free (Bareiss)
//! elimination on an integer lift, inverses go through the adjugate for
//! small dimensions, and [`MatZ::hnf`] gives a canonical column basis.

mod integer;
mod ldl;
mod rational;

pub use integer::MatZ;
pub use ldl::Ldl;
pub use rational::MatQ;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for `p/q`. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integral rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `x - floor(x)`, always in `[0, 1)`.
pub fn fract(x: &Rational) -> Rational {
    x - x.floor()
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses an optionally signed integer, optionally followed by `/` and a
/// positive integer. No whitespace is accepted.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let negative = match bytes.first() {
        Some(b'-') => {
            pos = 1;
            true
        }
        Some(b'+') => {
            pos = 1;
            false
        }
        _ => false,
    };
    let numer_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == numer_start {
        return Err(parse_err(pos, "expected a digit"));
    }
    let mut numer: BigInt = text[numer_start..pos]
        .parse()
        .map_err(|_| parse_err(numer_start, "invalid integer"))?;
    if negative {
        numer = -numer;
    }
    if pos == bytes.len() {
        return Ok(Rational::from_integer(numer));
    }
    if bytes[pos] != b'/' {
        return Err(parse_err(pos, "expected '/' or end of input"));
    }
    pos += 1;
    let denom_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == denom_start {
        return Err(parse_err(pos, "expected a digit in the denominator"));
    }
    if pos != bytes.len() {
        return Err(parse_err(pos, "trailing characters"));
    }
    let denom: BigInt = text[denom_start..]
        .parse()
        .map_err(|_| parse_err(denom_start, "invalid integer"))?;
    if denom.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(numer, denom))
}

fn parse_err(offset: usize, message: &str) -> Error {
    Error::Parse {
        offset,
        message: message.to_owned(),
    }
}

/// Nearest `f64` to a rational. Handles numerators and denominators far
/// outside the `f64` range by shifting before the division.
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if let (Some(p), Some(q)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if p.is_finite() && q.is_finite() && q != 0.0 {
            return p / q;
        }
    }
    let shift = x.numer().bits().max(x.denom().bits()) as i64 - 60;
    let (p, q) = if shift > 0 {
        (x.numer() >> shift as usize, x.denom() >> shift as usize)
    } else {
        (x.numer().clone(), x.denom().clone())
    };
    if q.is_zero() {
        return if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
    }
    p.to_f64().unwrap_or(0.0) / q.to_f64().unwrap_or(1.0)
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Fraction-free Gaussian elimination. Consumes a row-major `n×n` buffer.
pub(crate) fn bareiss_det(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                a.swap(k * n + c, swap * n + c);
            }
            sign = !sign;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &pivot * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}
