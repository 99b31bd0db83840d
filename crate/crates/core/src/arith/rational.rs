use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Trial division bound used when extracting square factors.
const TRIAL_DIVISION_LIMIT: u32 = 1 << 20;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"n"`, `"-n"`, `"p/q"` or `"-p/q"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let mut n = digits(num)?;
    let d = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    if negative {
        n = -n;
    }
    Ok(Rational::new(n, d))
}

/// Inverse of [`parse_rational`].
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Splits a nonzero integer as `t^2 * d` with `d` squarefree (sign kept in `d`).
///
/// Prime factors below the trial-division limit are removed exactly; a
/// remaining cofactor is checked for being a perfect square and otherwise
/// kept whole.
pub fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero());
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut m = n.abs();
    let mut square = BigInt::one();
    let mut core = BigInt::one();
    let mut p: u32 = 2;
    while p < TRIAL_DIVISION_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            square *= bp.pow(e / 2);
            if e % 2 == 1 {
                core *= &bp;
            }
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    if m > BigInt::one() {
        let r = m.sqrt();
        if &r * &r == m {
            square *= r;
        } else {
            core *= m;
        }
    }
    (square, core * sign)
}

/// Writes `r = t^2 * d` with `d` a squarefree integer, so `sqrt(r) = t * sqrt(d)`.
///
/// Zero maps to `(0, 1)`; a rational square maps to `(sqrt(r), 1)`.
pub fn normalize_radical(r: &Rational) -> (Rational, BigInt) {
    if r.is_zero() {
        return (Rational::zero(), BigInt::one());
    }
    // r = n/d = (n*d)/d^2
    let nd = r.numer() * r.denom();
    let (t, d) = squarefree_split(&nd);
    (Rational::new(t, r.denom().clone()), d)
}

/// Square root of a rational, if it is rational. The nonnegative root is returned.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &n * &n == *q.numer() && &d * &d == *q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}
