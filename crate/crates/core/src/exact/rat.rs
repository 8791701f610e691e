//! Arbitrary-precision rationals.
//!
//! `Rat` is `num_rational::BigRational`, which keeps its denominator positive
//! and the fraction reduced, so structural equality is value equality.
//! Text input is parsed exactly: `"7"`, `"-3/4"`, `"2.125"`, `"-0.5"`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses an integer, a fraction `p/q`, or a finite decimal, without ever
/// going through floating point.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = parse_int(n).ok_or_else(|| Error::Parse(s.to_string()))?;
        let d = parse_int(d).ok_or_else(|| Error::Parse(s.to_string()))?;
        if d.is_zero() {
            return Err(Error::Parse(s.to_string()));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(s.to_string()));
        }
        let (neg, ip) = match ip.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, ip.strip_prefix('+').unwrap_or(ip)),
        };
        if !ip.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(s.to_string()));
        }
        let digits = format!("{}{}", if ip.is_empty() { "0" } else { ip }, fp);
        let n: BigInt = digits.parse().map_err(|_| Error::Parse(s.to_string()))?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let r = Rat::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    parse_int(t)
        .map(Rat::from_integer)
        .ok_or_else(|| Error::Parse(s.to_string()))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Positive rational `g` such that every `x / g` is an integer and the
/// integers are coprime. Zero when all inputs are zero.
pub fn content<'a, I: IntoIterator<Item = &'a Rat>>(values: I) -> Rat {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values {
        if v.is_zero() {
            continue;
        }
        num_gcd = num_gcd.gcd(v.numer());
        den_lcm = den_lcm.lcm(v.denom());
    }
    if num_gcd.is_zero() {
        Rat::zero()
    } else {
        Rat::new(num_gcd.abs(), den_lcm)
    }
}

pub fn pow_rat(r: &Rat, e: u32) -> Rat {
    num_traits::pow(r.clone(), e as usize)
}

pub fn checked_div(a: &Rat, b: &Rat) -> Result<Rat> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}
